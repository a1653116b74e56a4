//! PRES v1 text format.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grade::{format_f64, Grade};

use super::{GradedMatrix, Presentation};

fn grade_str(g: &Grade) -> String {
    g.0.iter().map(|v| format_f64(*v)).collect::<Vec<_>>().join(" ")
}

pub fn write_pres(p: &Presentation) -> String {
    let m = &p.matrix;
    let mut out = String::new();
    let _ = writeln!(out, "pres 1");
    let _ = writeln!(out, "field {}", m.field().characteristic());
    let _ = writeln!(out, "params {}", m.params());
    let _ = writeln!(out, "rows {}", m.nrows());
    for g in m.row_grades() {
        let _ = writeln!(out, "{}", grade_str(g));
    }
    let _ = writeln!(out, "cols {}", m.ncols());
    for (g, c) in m.col_grades().iter().zip(m.cols()) {
        let entries: Vec<String> = c.iter().map(|(r, v)| format!("{r}:{v}")).collect();
        if entries.is_empty() {
            let _ = writeln!(out, "{} ;", grade_str(g));
        } else {
            let _ = writeln!(out, "{} ; {}", grade_str(g), entries.join(" "));
        }
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Result<(usize, &'a str)> {
        for (i, l) in self.inner.by_ref() {
            let l = l.trim();
            if !l.is_empty() && !l.starts_with('#') {
                return Ok((i + 1, l));
            }
        }
        Err(Error::Parse {
            line: 0,
            msg: "unexpected end of input".into(),
        })
    }

    fn keyed(&mut self, key: &str) -> Result<usize> {
        let (ln, l) = self.next()?;
        let mut parts = l.split_whitespace();
        if parts.next() != Some(key) {
            return Err(perr(ln, &format!("expected `{key} <n>`")));
        }
        let v = parts.next().and_then(|s| s.parse().ok()).ok_or_else(|| perr(ln, "bad count"))?;
        if parts.next().is_some() {
            return Err(perr(ln, "trailing tokens"));
        }
        Ok(v)
    }
}

fn perr(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.to_string(),
    }
}

fn parse_grade(ln: usize, s: &str, m: usize) -> Result<Grade> {
    let v: Vec<f64> = s
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| perr(ln, "bad grade value"))?;
    if v.len() != m || v.iter().any(|x| x.is_nan()) {
        return Err(perr(ln, &format!("expected {m} grade values")));
    }
    Ok(Grade::new(v))
}

pub fn read_pres(text: &str) -> Result<Presentation> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
    };
    let version = lines.keyed("pres")?;
    if version != 1 {
        return Err(perr(1, "unsupported PRES version"));
    }
    let field = Field::new(lines.keyed("field")? as u32)?;
    let m = lines.keyed("params")?;
    let k = lines.keyed("rows")?;
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let (ln, l) = lines.next()?;
        rows.push(parse_grade(ln, l, m)?);
    }
    let c = lines.keyed("cols")?;
    let mut col_grades = Vec::with_capacity(c);
    let mut cols = Vec::with_capacity(c);
    for _ in 0..c {
        let (ln, l) = lines.next()?;
        let (g, e) = l.split_once(';').ok_or_else(|| perr(ln, "missing `;`"))?;
        col_grades.push(parse_grade(ln, g, m)?);
        let mut col = Vec::new();
        for tok in e.split_whitespace() {
            let (i, v) = tok.split_once(':').ok_or_else(|| perr(ln, "entry must be `i:v`"))?;
            let i: u32 = i.parse().map_err(|_| perr(ln, "bad row index"))?;
            let v: u32 = v.parse().map_err(|_| perr(ln, "bad entry value"))?;
            col.push((i, v));
        }
        col.sort_unstable();
        if col.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(perr(ln, "duplicate row index"));
        }
        cols.push(col);
    }
    if let Ok((ln, _)) = lines.next() {
        return Err(perr(ln, "trailing content"));
    }
    Ok(Presentation::new(GradedMatrix::try_new(field, m, rows, col_grades, cols)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let p = Presentation::new(GradedMatrix::new(
            Field::new(5).unwrap(),
            2,
            vec![Grade::new(vec![0.1, 1.0 / 3.0]), Grade::new(vec![0.0, -2.5])],
            vec![Grade::new(vec![0.7, 1.0]), Grade::new(vec![f64::INFINITY, 0.0])],
            vec![vec![(0, 1), (1, 4)], vec![]],
        ));
        let s = write_pres(&p);
        let q = read_pres(&s).unwrap();
        assert_eq!(p, q);
        assert_eq!(write_pres(&q), s);
    }

    #[test]
    fn rejects_bad_entries() {
        let s = "pres 1\nfield 2\nparams 1\nrows 1\n2\ncols 1\n1 ; 0:1\n";
        assert!(read_pres(s).is_err());
        let s = "pres 1\nfield 3\nparams 1\nrows 1\n0\ncols 1\n1 ; 0:3\n";
        assert!(read_pres(s).is_err());
    }
}
