use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::SampledSpace;
use crate::grade::format_f64;

/// Point cloud CSV with a header of `x1..xd` (optional) and `f1..fn`
/// columns. Without `dist`, coordinates are required and the metric is
/// Euclidean; otherwise `dist` is a whitespace-separated square matrix.
pub fn read_point_cloud(csv_text: &str, dist: Option<&str>) -> Result<SampledSpace> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(csv_text.as_bytes());
    let headers = rdr.headers()?.clone();
    let mut xcols: Vec<(usize, usize)> = Vec::new();
    let mut fcols: Vec<(usize, usize)> = Vec::new();
    for (c, h) in headers.iter().enumerate() {
        let parse = |rest: &str| {
            rest.parse::<usize>().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("unexpected column `{h}`"),
            })
        };
        if let Some(rest) = h.strip_prefix('x') {
            xcols.push((parse(rest)?, c));
        } else if let Some(rest) = h.strip_prefix('f') {
            fcols.push((parse(rest)?, c));
        } else {
            return Err(Error::Parse {
                line: 1,
                msg: format!("unexpected column `{h}`"),
            });
        }
    }
    xcols.sort_unstable();
    fcols.sort_unstable();
    if fcols.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "at least one `f` column required".into(),
        });
    }
    let mut coords = Vec::new();
    let mut values = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let num = |c: usize| {
            rec[c].parse::<f64>().map_err(|_| Error::Parse {
                line: i + 2,
                msg: format!("bad number `{}`", &rec[c]),
            })
        };
        coords.push(xcols.iter().map(|&(_, c)| num(c)).collect::<Result<Vec<f64>>>()?);
        values.push(fcols.iter().map(|&(_, c)| num(c)).collect::<Result<Vec<f64>>>()?);
    }
    match dist {
        Some(text) => {
            let d = read_distance_matrix(text)?;
            let coords = (!xcols.is_empty()).then_some(coords);
            SampledSpace::from_matrix(d, values, coords)
        }
        None if xcols.is_empty() => Err(Error::MissingCoordinates),
        None => SampledSpace::euclidean(coords, values),
    }
}

/// Whitespace-separated square matrix, `inf` allowed. Row-major.
pub fn read_distance_matrix(text: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    let mut width = None;
    for (ln, line) in text.lines().enumerate() {
        let row: Vec<f64> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<f64>().map_err(|_| Error::Parse {
                    line: ln + 1,
                    msg: format!("bad number `{t}`"),
                })
            })
            .collect::<Result<_>>()?;
        if row.is_empty() {
            continue;
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(Error::Parse {
                    line: ln + 1,
                    msg: "ragged distance matrix".into(),
                })
            }
            _ => {}
        }
        out.extend(row);
    }
    let w = width.unwrap_or(0);
    if out.len() != w * w {
        return Err(Error::Parse {
            line: 0,
            msg: "distance matrix is not square".into(),
        });
    }
    Ok(out)
}

/// Inverse of [`read_point_cloud`] without a distance file.
pub fn write_point_cloud(space: &SampledSpace) -> String {
    let d = space.coords().and_then(|c| c.first()).map_or(0, Vec::len);
    let n = space.n_values();
    let mut head: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
    head.extend((1..=n).map(|i| format!("f{i}")));
    let mut out = head.join(",");
    out.push('\n');
    for i in 0..space.len() {
        let mut cells: Vec<String> = space
            .coords()
            .map(|c| c[i].iter().map(|v| format_f64(*v)).collect())
            .unwrap_or_default();
        cells.extend(space.value(i).iter().map(|v| format_f64(*v)));
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}
