#include <stdio.h>
#include "rcn.h"

int main(void) {
    int64_t xs[6] = {-3, -2, -1, 1, 2, 3};
    int64_t ys[6] = {9, 4, 1, 1, 4, 9};
    RcnPointSet *set = NULL;
    if (rcn_point_set_new(xs, ys, 6, &set) != RCN_STATUS_OK) return 1;

    RcnCrossing cr;
    if (rcn_crossing(set, &cr) != RCN_STATUS_OK || cr.brute != 15 || !cr.agreement) return 2;

    int64_t cx[3] = {0, 1, 2};
    RcnPointSet *bad = NULL;
    if (rcn_point_set_new(cx, cx, 3, &bad) != RCN_STATUS_DEGENERATE) return 3;
    if (rcn_last_error_message() == NULL) return 4;

    int64_t value = 0;
    bool ok = false;
    if (rcn_k30(&value, &ok) != RCN_STATUS_OK || value != 9726 || !ok) return 5;

    rcn_point_set_free(set);
    printf("ok\n");
    return 0;
}
