//! Ranges, value lists and `name=a..b` grids from the command line.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

/// `a`, `a..b` or `a..=b`; both ends inclusive. `a > b` is an empty range.
pub fn parse_range(text: &str) -> Result<RangeInclusive<i64>, String> {
    let text = text.trim();
    let int = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| format!("bad integer `{s}` in range `{text}`"))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(int(a)?..=int(b)?)
        }
        None => {
            let a = int(text)?;
            Ok(a..=a)
        }
    }
}

/// Comma-separated integers or ranges, e.g. `2,3,5..7`.
pub fn parse_values(text: &str) -> Result<Vec<i64>, String> {
    let mut out = Vec::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        out.extend(parse_range(part)?);
    }
    Ok(out)
}

/// A parsed `n=0..3,m=1..4,p=3,5` grid. A bare item after a comma continues
/// the previous axis, so value lists survive the comma separator.
#[derive(Debug, Default)]
pub struct Grid {
    axes: BTreeMap<String, Vec<String>>,
}

impl Grid {
    pub fn parse(text: &str, allowed: &[&str]) -> Result<Grid, String> {
        let mut grid = Grid::default();
        let mut current: Option<String> = None;
        for item in text.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (name, value) = match item.split_once('=') {
                Some((name, value)) => (name.trim().to_string(), value),
                None => match &current {
                    Some(name) => (name.clone(), item),
                    None => return Err(format!("grid item `{item}` has no axis name")),
                },
            };
            if !allowed.contains(&name.as_str()) {
                return Err(format!(
                    "unknown grid axis `{name}`; expected one of {}",
                    allowed.join(", ")
                ));
            }
            grid.axes
                .entry(name.clone())
                .or_default()
                .push(value.to_string());
            current = Some(name);
        }
        Ok(grid)
    }

    /// The axis as a single range; lists are rejected.
    pub fn range(&self, name: &str) -> Result<Option<RangeInclusive<i64>>, String> {
        match self.axes.get(name).map(Vec::as_slice) {
            None => Ok(None),
            Some([one]) => parse_range(one).map(Some),
            Some(_) => Err(format!("axis `{name}` takes a single range")),
        }
    }

    pub fn values(&self, name: &str) -> Result<Option<Vec<i64>>, String> {
        match self.axes.get(name) {
            None => Ok(None),
            Some(parts) => parse_values(&parts.join(",")).map(Some),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..10").unwrap(), 0..=10);
        assert_eq!(parse_range("2..=4").unwrap(), 2..=4);
        assert_eq!(parse_range("-3").unwrap(), -3..=-3);
        assert!(parse_range("0..-1").unwrap().is_empty());
        assert!(parse_range("a..2").is_err());
        assert_eq!(parse_values("3,5..7").unwrap(), [3, 5, 6, 7]);
    }

    #[test]
    fn grids() {
        let g = Grid::parse("n=0..3, m=1..4,p=3,5", &["n", "m", "p"]).unwrap();
        assert_eq!(g.range("n").unwrap(), Some(0..=3));
        assert_eq!(g.values("p").unwrap(), Some(vec![3, 5]));
        assert_eq!(g.range("k").unwrap(), None);
        assert!(g.range("p").is_err());
        assert!(Grid::parse("z=1", &["n"]).is_err());
        assert!(Grid::parse("3", &["n"]).is_err());
    }
}
