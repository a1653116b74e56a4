use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grade::format_f64;

/// A finite multiset of half-open bars `[birth, death)`, `death` possibly
/// `+inf`. Bars with `birth >= death` are dropped on construction.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Barcode {
    bars: Vec<(f64, f64)>,
}

impl Barcode {
    pub fn new(bars: impl IntoIterator<Item = (f64, f64)>) -> Self {
        let mut bars: Vec<(f64, f64)> = bars.into_iter().filter(|(b, d)| b < d).collect();
        bars.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        Barcode { bars }
    }

    pub fn bars(&self) -> &[(f64, f64)] {
        &self.bars
    }

    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    /// Deaths capped at `cap`; bars born at or after `cap` disappear.
    pub fn truncated(&self, cap: f64) -> Barcode {
        Barcode::new(self.bars.iter().map(|&(b, d)| (b, d.min(cap))))
    }

    /// Number of bars containing `t`.
    pub fn alive_at(&self, t: f64) -> usize {
        self.bars.iter().filter(|&&(b, d)| b <= t && t < d).count()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("birth,death\n");
        for &(b, d) in &self.bars {
            let _ = writeln!(out, "{},{}", format_f64(b), format_f64(d));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Barcode> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
        let headers = rdr.headers()?.clone();
        if headers.len() != 2 || &headers[0] != "birth" || &headers[1] != "death" {
            return Err(Error::Parse {
                line: 1,
                msg: "expected header `birth,death`".into(),
            });
        }
        let mut bars = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let parse = |s: &str| {
                s.parse::<f64>().map_err(|_| Error::Parse {
                    line: i + 2,
                    msg: format!("bad number `{s}`"),
                })
            };
            bars.push((parse(&rec[0])?, parse(&rec[1])?));
        }
        Ok(Barcode::new(bars))
    }
}

impl FromIterator<(f64, f64)> for Barcode {
    fn from_iter<T: IntoIterator<Item = (f64, f64)>>(iter: T) -> Self {
        Barcode::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drops_empty_bars_and_round_trips() {
        let b = Barcode::new([(1.0, 1.0), (0.0, f64::INFINITY), (0.5, 0.75)]);
        assert_eq!(b.len(), 2);
        let c = Barcode::from_csv(&b.to_csv()).unwrap();
        assert_eq!(b, c);
    }

    #[test]
    fn truncation() {
        let b = Barcode::new([(0.0, f64::INFINITY), (12.0, 13.0)]).truncated(10.0);
        assert_eq!(b.bars(), &[(0.0, 10.0)]);
    }
}
