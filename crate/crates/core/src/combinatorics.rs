//! Integer partitions, tableaux and the shape-level toolkit.
//!
//! Cells are addressed `(row, column)` with 1-based indices in English
//! convention: row 1 is the top row.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::characters::Decomposition;
use crate::error::{Error, Result};

/// Largest `m` for which [`enumerate_syt`] runs unless a caller asks otherwise.
pub const DEFAULT_SYT_LIMIT: usize = 14;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros, so any multiset of part sizes is accepted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(k)^copies` followed by nothing; handy for shapes such as `2^n`.
    pub fn rectangle(part: usize, copies: usize) -> Self {
        Partition::from_unsorted(vec![part; copies])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The number `m` being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `r` (1-based), zero past the last row.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Hook length of cell `(row, col)`, both 1-based.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.row(row) - col;
        let leg = self.0.iter().skip(row).filter(|&&p| p >= col).count();
        arm + leg + 1
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn hook_dim(&self) -> u64 {
        let mut num = BigUint::one();
        for i in 2..=self.size() {
            num *= i;
        }
        let den = self
            .cells()
            .fold(BigUint::one(), |acc, (r, c)| acc * self.hook(r, c));
        (num / den).to_u64().expect("hook dimension overflows u64")
    }

    /// Rows whose last cell can be removed leaving a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&i| i + 1 == self.0.len() || self.0[i] > self.0[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// Shape with the last cell of row `r` (1-based) removed.
    pub fn remove_from_row(&self, r: usize) -> Option<Partition> {
        if !self.removable_rows().contains(&r) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[r - 1] -= 1;
        if parts[r - 1] == 0 {
            parts.pop();
        }
        Some(Partition(parts))
    }

    /// True when the conjugate is a run `(a, a-1, ..., a-r)` of consecutive
    /// descending integers.
    pub fn is_staircase(&self) -> bool {
        let conj = self.conjugate();
        !conj.is_empty() && conj.0.windows(2).all(|w| w[0] == w[1] + 1)
    }

    /// Multiplicities `a_i` of each part size `i`, indexed from 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut a = vec![0; self.size() + 1];
        for &p in &self.0 {
            a[p] += 1;
        }
        a
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Accepts `2,2,1` as well as the exponent form `2^2,1`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e),
                None => (token, "1"),
            };
            let base: usize = base
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {token:?}")))?;
            let exp: usize = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
            if exp > 1 << 16 {
                return Err(Error::Parse(format!("exponent too large in {token:?}")));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// All partitions of `m`, in reverse lexicographic order: `(m)` first,
/// `(1^m)` last.
pub fn partitions(m: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// A bijective filling of a Young diagram by `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let m = shape.size();
        let mut seen = vec![false; m + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > m || seen[x] {
                return Err(Error::Invalid(format!("filling {rows:?} is not a bijection onto 1..={m}")));
            }
            seen[x] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// Builds a tableau from its columns (each listed top-down).
    pub fn from_columns(columns: &[Vec<usize>]) -> Result<Self> {
        let height = columns.first().map_or(0, Vec::len);
        let rows = (0..height)
            .map(|r| columns.iter().filter_map(|col| col.get(r).copied()).collect())
            .collect();
        Tableau::from_rows(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at `(row, col)`, both 1-based.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// Column `c` (1-based), top-down.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows.iter().filter_map(|r| r.get(c - 1).copied()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (1..=self.shape.row(1)).map(|c| self.column(c)).collect()
    }

    /// Row-major reading word.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Row (1-based) containing entry `x`.
    pub fn row_of(&self, x: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&x)).map(|i| i + 1)
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .columns()
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

/// Parses the row-major form `1,3;2`.
impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad entry {x:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A tableau whose rows and columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardYoungTableau(Tableau);

impl StandardYoungTableau {
    pub fn new(t: Tableau) -> Result<Self> {
        if t.is_standard() {
            Ok(StandardYoungTableau(t))
        } else {
            Err(Error::Invalid(format!("tableau {t} is not standard")))
        }
    }

    pub fn tableau(&self) -> &Tableau {
        &self.0
    }

    /// Descents `i`: entries where `i + 1` sits in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        let m = self.0.shape.size();
        let mut row = vec![0; m + 1];
        for (r, entries) in self.0.rows.iter().enumerate() {
            for &x in entries {
                row[x] = r;
            }
        }
        (1..m).filter(|&i| row[i + 1] > row[i]).collect()
    }

    /// Major index: the sum of the descents.
    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn conjugate(shape: &Partition) -> Partition {
    shape.conjugate()
}

pub fn hook_dim(shape: &Partition) -> u64 {
    shape.hook_dim()
}

pub fn maj(t: &StandardYoungTableau) -> usize {
    t.maj()
}

pub fn is_staircase(shape: &Partition) -> bool {
    shape.is_staircase()
}

/// All standard Young tableaux of `shape`, sorted by row-major reading word.
pub fn enumerate_syt(shape: &Partition, limit: usize) -> Result<Vec<StandardYoungTableau>> {
    let m = shape.size();
    if m > limit {
        return Err(Error::EnumerationLimit { what: "standard tableaux of size", requested: m, limit });
    }
    fn place(
        shape: &Partition,
        next: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardYoungTableau>,
    ) {
        if next > shape.size() {
            let t = Tableau { shape: shape.clone(), rows: rows.clone() };
            out.push(StandardYoungTableau(t));
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let above_ok = r == 0 || rows[r - 1].len() > len;
            if len < shape.0[r] && above_ok {
                rows[r].push(next);
                place(shape, next + 1, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    place(shape, 1, &mut vec![Vec::new(); shape.len()], &mut out);
    out.sort_by_cached_key(|t| t.0.reading_word());
    Ok(out)
}

/// Branching rule: the restriction of `S^shape` to `S_{m-1}`.
pub fn restrict_irreducible(shape: &Partition) -> Result<Decomposition> {
    if shape.size() < 2 {
        return Err(Error::Invalid(format!("cannot restrict a shape of size {}", shape.size())));
    }
    Ok(Decomposition::from_terms(
        shape
            .removable_rows()
            .into_iter()
            .filter_map(|r| shape.remove_from_row(r))
            .map(|p| (p, 1)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,3,1").conjugate(), p("3,2,2"));
        assert_eq!(p("2,2,1").conjugate(), p("3,2"));
        assert_eq!(p("1").conjugate(), p("1"));
    }

    #[test]
    fn hook_dim_examples() {
        assert_eq!(p("2,2,1").hook_dim(), 5);
        assert_eq!(p("2,1,1,1").hook_dim(), 4);
        assert_eq!(p("1^6").hook_dim(), 1);
        assert_eq!(p("3,2,1").hook_dim(), 16);
    }

    #[test]
    fn syt_examples() {
        let t = enumerate_syt(&p("2,1"), DEFAULT_SYT_LIMIT).unwrap();
        let words: Vec<String> = t.iter().map(|t| t.to_string()).collect();
        assert_eq!(words, ["1,2;3", "1,3;2"]);
        assert_eq!(enumerate_syt(&p("5"), DEFAULT_SYT_LIMIT).unwrap().len(), 1);
        let t = enumerate_syt(&p("2,2"), DEFAULT_SYT_LIMIT).unwrap();
        let words: Vec<String> = t.iter().map(|t| t.to_string()).collect();
        assert_eq!(words, ["1,2;3,4", "1,3;2,4"]);
        assert!(matches!(
            enumerate_syt(&p("10,5"), 12),
            Err(Error::EnumerationLimit { .. })
        ));
    }

    #[test]
    fn maj_examples() {
        let syt = |s: &str| StandardYoungTableau::new(s.parse().unwrap()).unwrap();
        assert_eq!(syt("1,3;2").maj(), 1);
        assert_eq!(syt("1,2;3").maj(), 2);
        assert_eq!(syt("1,2,3,4").maj(), 0);
        assert_eq!(syt("1,2;3;4").maj(), 5);
        assert!(StandardYoungTableau::new("2,1;3".parse().unwrap()).is_err());
    }

    #[test]
    fn restriction_examples() {
        let d = restrict_irreducible(&p("2,2,2")).unwrap();
        assert_eq!(d.terms(), &[(p("2,2,1"), 1)]);
        let d = restrict_irreducible(&p("2,1")).unwrap();
        assert_eq!(d.multiplicity(&p("2")), 1);
        assert_eq!(d.multiplicity(&p("1,1")), 1);
        assert_eq!(d.terms().len(), 2);
        let d = restrict_irreducible(&p("3,2")).unwrap();
        assert_eq!(d.multiplicity(&p("2,2")), 1);
        assert_eq!(d.multiplicity(&p("3,1")), 1);
    }

    #[test]
    fn staircase_examples() {
        assert!(p("2,2,1").is_staircase());
        assert!(p("3,2,1").is_staircase());
        assert!(!p("2,2").is_staircase());
        assert!(p("1").is_staircase());
    }

    #[test]
    fn parsing() {
        assert_eq!(p("2^3,1"), p("2,2,2,1"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("1,2;3,3".parse::<Tableau>().is_err());
        let t: Tableau = "1,3;2".parse().unwrap();
        assert_eq!(t.column(1), vec![1, 2]);
        assert_eq!(t.to_string(), "1,3;2");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|m| partitions(m).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(3), vec![p("3"), p("2,1"), p("1,1,1")]);
    }
}
