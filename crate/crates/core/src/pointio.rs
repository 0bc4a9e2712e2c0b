//! Reading and writing point files: a plain text format and the headerless
//! binary order-type database format.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geom::{Point, PointSet};

/// Text format: a line with `n`, then `n` lines `x y`. Lines starting with
/// `#` are comments; blank lines separate sets.
pub fn parse_point_text(text: &str) -> Result<Vec<PointSet>> {
    let mut raw: Vec<Vec<Point>> = Vec::new();
    // (expected size, points so far, header line)
    let mut open: Option<(usize, Vec<Point>, usize)> = None;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        let parse_err = |msg: String| Error::Parse { line: lineno, msg };
        if line.is_empty() {
            if let Some((want, pts, header)) = open.take() {
                if pts.len() != want {
                    return Err(Error::Parse {
                        line: header,
                        msg: format!("set declares {want} points but has {}", pts.len()),
                    });
                }
                raw.push(pts);
            }
            continue;
        }
        match &mut open {
            None => {
                let n: usize = line
                    .parse()
                    .map_err(|_| parse_err(format!("expected a point count, got {line:?}")))?;
                open = Some((n, Vec::with_capacity(n), lineno));
            }
            Some((want, pts, _)) => {
                if pts.len() == *want {
                    return Err(parse_err("more points than declared".into()));
                }
                let mut it = line.split_whitespace();
                let mut coord = || -> Result<i64> {
                    let tok = it
                        .next()
                        .ok_or_else(|| parse_err("expected two coordinates".into()))?;
                    tok.parse()
                        .map_err(|_| parse_err(format!("bad coordinate {tok:?}")))
                };
                let (x, y) = (coord()?, coord()?);
                if it.next().is_some() {
                    return Err(parse_err("expected two coordinates".into()));
                }
                pts.push(Point::new(x, y));
            }
        }
    }
    if let Some((want, pts, header)) = open {
        if pts.len() != want {
            return Err(Error::Parse {
                line: header,
                msg: format!("set declares {want} points but has {}", pts.len()),
            });
        }
        raw.push(pts);
    }
    validate_all(raw)
}

fn validate_all(raw: Vec<Vec<Point>>) -> Result<Vec<PointSet>> {
    raw.into_iter()
        .enumerate()
        .map(|(index, pts)| {
            PointSet::new(pts).map_err(|e| Error::InSet {
                index,
                source: Box::new(e),
            })
        })
        .collect()
}

pub fn read_point_file(path: &Path) -> Result<Vec<PointSet>> {
    parse_point_text(&std::fs::read_to_string(path)?)
}

pub fn write_point_text(set: &PointSet) -> String {
    let mut out = format!("{}\n", set.len());
    for p in set.points() {
        let _ = writeln!(out, "{p}");
    }
    out
}

/// Concatenated sets of `n` points; each coordinate is one byte (`bits = 8`)
/// or a little-endian `u16` (`bits = 16`).
pub fn parse_order_types(bytes: &[u8], n: usize, bits: u32) -> Result<Vec<PointSet>> {
    let width = match bits {
        8 => 1,
        16 => 2,
        other => {
            return Err(Error::InvalidArgument(format!(
                "bits must be 8 or 16, got {other}"
            )));
        }
    };
    if n == 0 {
        return Err(Error::InvalidArgument("set size must be positive".into()));
    }
    let record = 2 * width * n;
    let tail = bytes.len() % record;
    if tail != 0 {
        return Err(Error::Truncated {
            offset: bytes.len() - tail,
            need: record - tail,
        });
    }
    let raw = bytes
        .chunks_exact(record)
        .map(|rec| {
            let coords: Vec<i64> = if width == 1 {
                rec.iter().map(|&b| b as i64).collect()
            } else {
                rec.chunks_exact(2)
                    .map(|c| u16::from_le_bytes([c[0], c[1]]) as i64)
                    .collect()
            };
            coords
                .chunks_exact(2)
                .map(|c| Point::new(c[0], c[1]))
                .collect()
        })
        .collect();
    validate_all(raw)
}

pub fn read_order_type_db(path: &Path, n: usize, bits: u32) -> Result<Vec<PointSet>> {
    parse_order_types(&std::fs::read(path)?, n, bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Degeneracy;

    #[test]
    fn one_text_set() {
        let sets = parse_point_text("4\n0 0\n1 0\n0 1\n1 1\n").unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].len(), 4);
    }

    #[test]
    fn comments_and_separators() {
        let text = "# two sets\n3\n0 0\n4 0\n0 4\n\n\n# second\n3\n1 1\n5 2\n2 7\n";
        let sets = parse_point_text(text).unwrap();
        assert_eq!(sets.len(), 2);
        assert_eq!(sets[1][2], Point::new(2, 7));
    }

    #[test]
    fn text_errors() {
        assert!(matches!(
            parse_point_text("3\n0 0\n1 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_point_text("2\n0 0\n1 x\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_point_text("1\n0 0\n1 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_point_text("x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        let err = parse_point_text("3\n0 0\n1 1\n5 2\n\n3\n0 0\n1 1\n2 2\n").unwrap_err();
        match err {
            Error::InSet { index, source } => {
                assert_eq!(index, 1);
                assert!(matches!(
                    *source,
                    Error::Degenerate(Degeneracy::Collinear(..))
                ));
            }
            other => panic!("{other}"),
        }
        assert!(parse_point_text("3\n0 0\n1 1\n2 2\n")
            .unwrap_err()
            .to_string()
            .contains("general position violated"));
    }

    #[test]
    fn text_round_trip() {
        let set = PointSet::from_coords(&[(0, 0), (-3, 1), (2, 5)]).unwrap();
        let back = parse_point_text(&write_point_text(&set)).unwrap();
        assert_eq!(back, vec![set]);
    }

    #[test]
    fn binary_8_bit() {
        let bytes = [0u8, 0, 9, 0, 0, 9, 3, 3, 200, 1, 1, 200];
        let sets = parse_order_types(&bytes, 3, 8).unwrap();
        assert_eq!(sets.len(), 2);
        assert_eq!(sets[1][0], Point::new(3, 3));
        assert_eq!(sets[1][2], Point::new(1, 200));
    }

    #[test]
    fn binary_16_bit() {
        let mut bytes = Vec::new();
        for (x, y) in [(0u16, 0u16), (1000, 1), (2, 60000)] {
            bytes.extend(x.to_le_bytes());
            bytes.extend(y.to_le_bytes());
        }
        let sets = parse_order_types(&bytes, 3, 16).unwrap();
        assert_eq!(sets[0][2], Point::new(2, 60000));
    }

    #[test]
    fn binary_errors() {
        let bytes = [0u8, 0, 9, 0, 0, 9, 3, 3, 200];
        assert!(matches!(
            parse_order_types(&bytes, 3, 8),
            Err(Error::Truncated { offset: 6, need: 3 })
        ));
        assert!(parse_order_types(&bytes, 3, 12).is_err());
        assert!(parse_order_types(&[], 0, 8).is_err());
        let collinear = [0u8, 0, 1, 1, 2, 2];
        assert!(matches!(
            parse_order_types(&collinear, 3, 8),
            Err(Error::InSet { index: 0, .. })
        ));
    }
}
