//! Specht modules as quotients of the column-tabloid space by Garnir
//! relations.
//!
//! `M^λ` is spanned by bijective fillings of `λ` modulo the column
//! relations `t + s` (`s` swaps two entries of one column); its basis is
//! the set of column-sorted fillings. A Garnir generator `g^t_{c,k}` is
//! `t̄ - Σ s̄`, summed over the ways to exchange `k` entries of column `c`
//! with the top `k` entries of column `c + 1`, keeping the vertical order of
//! both exchanged sets.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{Partition, Tableau};
use crate::error::{Error, Result};
use crate::linalg::{rank, rref, SparseRationalMatrix, SparseVector};
use crate::perm::{sort_sign, Permutation};

/// Largest `m` handled by default.
pub const DEFAULT_GARNIR_LIMIT: usize = 8;

/// Sorts each column ascending; the sign is the product of the column
/// sorting parities.
pub fn canonical_tabloid(t: &Tableau) -> (Tableau, i32) {
    let mut sign = 1;
    let columns: Vec<Vec<usize>> = t
        .columns()
        .into_iter()
        .map(|mut col| {
            sign *= sort_sign(&col);
            col.sort_unstable();
            col
        })
        .collect();
    (Tableau::from_columns(&columns).expect("same entries, same shape"), sign)
}

/// Basis of `M^λ`: all column-sorted fillings.
#[derive(Clone, Debug)]
pub struct ColumnTabloidSpace {
    shape: Partition,
    basis: Vec<Tableau>,
    index: HashMap<Vec<Vec<usize>>, usize>,
}

fn combinations(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < r - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, r, 0, &mut Vec::new(), &mut out);
    out
}

impl ColumnTabloidSpace {
    pub fn new(shape: &Partition, limit: usize) -> Result<Self> {
        let m = shape.size();
        if m > limit {
            return Err(Error::BoundExceeded { what: "tableau size", size: m, bound: limit });
        }
        if m == 0 {
            return Err(Error::Invalid("empty shape".into()));
        }
        let heights = shape.conjugate();
        let mut fillings: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        let mut remaining_sets: Vec<Vec<usize>> = vec![(1..=m).collect()];
        for &h in heights.parts() {
            let mut next_fill = Vec::new();
            let mut next_rem = Vec::new();
            for (cols, rem) in fillings.iter().zip(&remaining_sets) {
                for chosen in combinations(rem, h) {
                    let mut c = cols.clone();
                    c.push(chosen.clone());
                    next_fill.push(c);
                    next_rem.push(rem.iter().copied().filter(|x| !chosen.contains(x)).collect());
                }
            }
            fillings = next_fill;
            remaining_sets = next_rem;
        }
        fillings.sort();
        let index = fillings.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        let basis = fillings
            .iter()
            .map(|cols| Tableau::from_columns(cols).expect("valid filling"))
            .collect();
        Ok(ColumnTabloidSpace { shape: shape.clone(), basis, index })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    /// Coordinates of an arbitrary filling: `(basis index, ±1)`.
    pub fn expand(&self, t: &Tableau) -> Result<(usize, i32)> {
        if t.shape() != &self.shape {
            return Err(Error::Shape(format!("filling of shape ({}) in M^({})", t.shape(), self.shape)));
        }
        let (sorted, sign) = canonical_tabloid(t);
        Ok((self.index[&sorted.columns()], sign))
    }

    /// `σ` applied to every basis filling.
    pub fn permutation_action(&self, sigma: &Permutation) -> Vec<(usize, i32)> {
        self.basis
            .iter()
            .map(|t| {
                let rows = t.rows().iter().map(|r| r.iter().map(|&x| sigma.apply(x as u32) as usize).collect()).collect();
                self.expand(&Tableau::from_rows(rows).expect("relabelled filling")).expect("same shape")
            })
            .collect()
    }
}

/// One Garnir generator with its expansion over the tabloid basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GarnirGenerator {
    pub t: Tableau,
    pub column: usize,
    pub k: usize,
    /// Number of exchange terms `s`, one per `k`-subset of column `c`.
    pub exchanges: usize,
    pub vector: SparseVector,
}

/// `g^t_{c,k}` expanded over the column-sorted basis.
pub fn garnir_vector(space: &ColumnTabloidSpace, t: &Tableau, c: usize, k: usize) -> Result<GarnirGenerator> {
    let shape = space.shape();
    let heights = shape.conjugate();
    if c == 0 || c >= heights.len() {
        return Err(Error::Invalid(format!("shape ({shape}) has no column {}", c + 1)));
    }
    let next_len = heights.parts()[c];
    if k == 0 || k > next_len {
        return Err(Error::Invalid(format!("exchange size {k} outside 1..={next_len}")));
    }
    let mut coeffs: HashMap<usize, i64> = HashMap::new();
    let (idx, sign) = space.expand(t)?;
    *coeffs.entry(idx).or_insert(0) += sign as i64;

    let columns = t.columns();
    let left = &columns[c - 1];
    let right = &columns[c];
    let positions: Vec<usize> = (0..left.len()).collect();
    let subsets = combinations(&positions, k);
    let exchanges = subsets.len();
    for chosen in subsets {
        let mut new_left = left.clone();
        let mut new_right = right.clone();
        for (slot, &pos) in chosen.iter().enumerate() {
            new_right[slot] = left[pos];
            new_left[pos] = right[slot];
        }
        let mut cols = columns.clone();
        cols[c - 1] = new_left;
        cols[c] = new_right;
        let s = Tableau::from_columns(&cols)?;
        let (idx, sign) = space.expand(&s)?;
        *coeffs.entry(idx).or_insert(0) -= sign as i64;
    }
    let mut vector: SparseVector = coeffs
        .into_iter()
        .filter(|&(_, v)| v != 0)
        .map(|(i, v)| (i, BigRational::from_integer(v.into())))
        .collect();
    vector.sort_by_key(|e| e.0);
    Ok(GarnirGenerator { t: t.clone(), column: c, k, exchanges, vector })
}

/// Which Garnir generators to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GarnirMode {
    /// Every `g^t_{c,k}`.
    Full,
    /// Only `g^t_{c,λ'_{c+1}}` on columns with `λ'_{c+1} = λ'_c - 1`, every
    /// `k` elsewhere.
    Reduced,
    /// Only full-column exchanges `g^t_{c,λ'_{c+1}}`, on every column.
    FullColumnOnly,
}

impl fmt::Display for GarnirMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GarnirMode::Full => "full",
            GarnirMode::Reduced => "reduced",
            GarnirMode::FullColumnOnly => "full-column-only",
        })
    }
}

impl FromStr for GarnirMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(GarnirMode::Full),
            "reduced" => Ok(GarnirMode::Reduced),
            "full-column-only" => Ok(GarnirMode::FullColumnOnly),
            _ => Err(Error::Parse(format!("unknown Garnir mode {s:?}"))),
        }
    }
}

/// `(column, k)` pairs used by `mode`.
pub fn generator_indices(shape: &Partition, mode: GarnirMode) -> Vec<(usize, usize)> {
    let h = shape.conjugate();
    let h = h.parts();
    let mut out = Vec::new();
    for c in 1..h.len() {
        let (this, next) = (h[c - 1], h[c]);
        let reduce = match mode {
            GarnirMode::Full => false,
            GarnirMode::Reduced => next + 1 == this,
            GarnirMode::FullColumnOnly => true,
        };
        if reduce {
            out.push((c, next));
        } else {
            out.extend((1..=next).map(|k| (c, k)));
        }
    }
    out
}

/// All generators for `mode`, instantiated at every column-sorted filling,
/// or at standard tableaux only when `standard_only` is set.
pub fn garnir_generators(
    space: &ColumnTabloidSpace,
    mode: GarnirMode,
    standard_only: bool,
) -> Result<Vec<GarnirGenerator>> {
    let indices = generator_indices(space.shape(), mode);
    let per_t: Vec<Vec<GarnirGenerator>> = space
        .basis()
        .par_iter()
        .filter(|t| !standard_only || t.is_standard())
        .map(|t| {
            indices
                .iter()
                .map(|&(c, k)| garnir_vector(space, t, c, k))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(per_t.into_iter().flatten().collect())
}

pub fn generator_matrix(space: &ColumnTabloidSpace, generators: &[GarnirGenerator]) -> SparseRationalMatrix {
    let mut m = SparseRationalMatrix::empty(space.dim());
    for g in generators {
        m.push_row(g.vector.clone()).expect("indices in range");
    }
    m
}

/// Dimension of `M^λ / G` for the generator set selected by `mode`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpechtReport {
    pub shape: Partition,
    pub mode: GarnirMode,
    pub standard_only: bool,
    pub tabloid_dim: usize,
    pub generators: usize,
    pub relation_rank: usize,
    pub quotient_dim: usize,
    pub hook_dim: u64,
}

impl SpechtReport {
    pub fn matches_hook_formula(&self) -> bool {
        self.quotient_dim as u64 == self.hook_dim
    }
}

pub fn specht_quotient(shape: &Partition, mode: GarnirMode, standard_only: bool, limit: usize) -> Result<SpechtReport> {
    let space = ColumnTabloidSpace::new(shape, limit)?;
    let gens = garnir_generators(&space, mode, standard_only)?;
    let matrix = generator_matrix(&space, &gens);
    let r = rank(&matrix);
    Ok(SpechtReport {
        shape: shape.clone(),
        mode,
        standard_only,
        tabloid_dim: space.dim(),
        generators: gens.len(),
        relation_rank: r,
        quotient_dim: space.dim() - r,
        hook_dim: shape.hook_dim(),
    })
}

/// `dim M^λ - rank(all Garnir generators)`.
pub fn specht_dim_full(shape: &Partition, limit: usize) -> Result<usize> {
    Ok(specht_quotient(shape, GarnirMode::Full, false, limit)?.quotient_dim)
}

/// Quotient dimension using the reduced generator set.
pub fn specht_dim_reduced(shape: &Partition, limit: usize) -> Result<usize> {
    Ok(specht_quotient(shape, GarnirMode::Reduced, false, limit)?.quotient_dim)
}

/// Whether two generator sets span the same subspace of `M^λ`: equal ranks
/// and each set reduces to zero against the other's echelon form.
pub fn same_row_space(a: &SparseRationalMatrix, b: &SparseRationalMatrix) -> bool {
    let (ea, eb) = (rref(a), rref(b));
    ea.rank() == eb.rank()
        && a.rows().iter().all(|r| eb.contains(r))
        && b.rows().iter().all(|r| ea.contains(r))
}

/// Whether every generator, relabelled by `sigma`, lies in the span of the
/// generator set.
pub fn is_invariant_under(space: &ColumnTabloidSpace, generators: &[GarnirGenerator], sigma: &Permutation) -> bool {
    let span = rref(&generator_matrix(space, generators));
    let action = space.permutation_action(sigma);
    generators.iter().all(|g| {
        let mut image: SparseVector = g
            .vector
            .iter()
            .map(|(i, v)| {
                let (j, sign) = action[*i];
                (j, if sign < 0 { -v.clone() } else { v.clone() })
            })
            .collect();
        image.sort_by_key(|e| e.0);
        span.contains(&image)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_tabloid_examples() {
        assert_eq!(canonical_tabloid(&t("1,3;2")), (t("1,3;2"), 1));
        assert_eq!(canonical_tabloid(&t("2,3;1")), (t("1,3;2"), -1));
        assert_eq!(canonical_tabloid(&t("3,4;1,2")), (t("1,2;3,4"), 1));
    }

    #[test]
    fn tabloid_space_sizes() {
        assert_eq!(ColumnTabloidSpace::new(&p("2,1"), 8).unwrap().dim(), 3);
        assert_eq!(ColumnTabloidSpace::new(&p("2,2"), 8).unwrap().dim(), 6);
        assert_eq!(ColumnTabloidSpace::new(&p("1^4"), 8).unwrap().dim(), 1);
        assert_eq!(ColumnTabloidSpace::new(&p("4"), 8).unwrap().dim(), 24);
        assert!(ColumnTabloidSpace::new(&p("5,4"), 8).is_err());
    }

    #[test]
    fn garnir_vector_examples() {
        let space = ColumnTabloidSpace::new(&p("2,1"), 8).unwrap();
        let g = garnir_vector(&space, &t("1,3;2"), 1, 1).unwrap();
        // t̄ = [12|3]; s({1}) = -[23|1]; s({2}) = [13|2]
        let idx = |s: &str| space.expand(&t(s)).unwrap().0;
        let q = |n: i64| BigRational::from_integer(n.into());
        let mut expected = vec![(idx("1,3;2"), q(1)), (idx("2,1;3"), q(1)), (idx("1,2;3"), q(-1))];
        expected.sort_by_key(|e| e.0);
        assert_eq!(g.vector, expected);

        let space = ColumnTabloidSpace::new(&p("2,2"), 8).unwrap();
        let g = garnir_vector(&space, &t("1,3;2,4"), 1, 2).unwrap();
        assert_eq!(g.exchanges, 1);
        let small = ColumnTabloidSpace::new(&p("2,1"), 8).unwrap();
        for t in small.basis() {
            assert_eq!(garnir_vector(&small, t, 1, 1).unwrap().exchanges, 2);
        }
        assert!(garnir_vector(&space, &t("1,3;2,4"), 2, 1).is_err());
        assert!(garnir_vector(&space, &t("1,3;2,4"), 1, 3).is_err());
        assert!(garnir_vector(&space, &t("1,3;2,4"), 1, 0).is_err());
    }

    #[test]
    fn small_quotients() {
        assert_eq!(specht_dim_full(&p("2,1"), 8).unwrap(), 2);
        assert_eq!(specht_dim_full(&p("2,2"), 8).unwrap(), 2);
        let r = specht_quotient(&p("2,2"), GarnirMode::Full, false, 8).unwrap();
        assert_eq!((r.tabloid_dim, r.relation_rank), (6, 4));
        assert_eq!(specht_dim_full(&p("1^5"), 8).unwrap(), 1);
        assert_eq!(specht_dim_reduced(&p("2,1"), 8).unwrap(), 2);
        assert_eq!(specht_dim_reduced(&p("3,2,1"), 8).unwrap(), 16);
    }

    #[test]
    fn reduced_indices() {
        assert_eq!(generator_indices(&p("2,1"), GarnirMode::Reduced), vec![(1, 1)]);
        assert_eq!(generator_indices(&p("2,2"), GarnirMode::Reduced), vec![(1, 1), (1, 2)]);
        // (3,3,1): heights 3,2,2; column 1 reduced, column 2 full
        assert_eq!(generator_indices(&p("3,3,1"), GarnirMode::Reduced), vec![(1, 2), (2, 1), (2, 2)]);
        assert_eq!(generator_indices(&p("3,3,1"), GarnirMode::FullColumnOnly), vec![(1, 2), (2, 2)]);
    }

    #[test]
    fn generators_are_invariant() {
        let space = ColumnTabloidSpace::new(&p("2,2"), 8).unwrap();
        let gens = garnir_generators(&space, GarnirMode::Full, false).unwrap();
        for sigma in [Permutation::from_cycles(4, &[&[1, 2]]).unwrap(), Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap()] {
            assert!(is_invariant_under(&space, &gens, &sigma));
        }
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("reduced".parse::<GarnirMode>().unwrap(), GarnirMode::Reduced);
        assert!("other".parse::<GarnirMode>().is_err());
    }
}
