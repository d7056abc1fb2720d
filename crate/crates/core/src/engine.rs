//! The multilinear component `ρ_{n,k}` of the free LAnKe.
//!
//! `V_{n,k}` is spanned by canonical bracketed permutations (antisymmetry
//! only). Every instance of the generalized Jacobi identity
//!
//! ```text
//! [[x1..xn], y1..y(n-1)] = Σ_i [x1.., [xi, y1..y(n-1)], ..xn]
//! ```
//!
//! with the `x`'s and `y`'s whole subtrees, placed inside any surrounding
//! context, gives one relation row; `ρ_{n,k}` is the quotient of `V_{n,k}`
//! by their span. For `k = 3` the relations are the images of the operator
//! `φ` on the basis `v_S = [[a1..an], b1..b(n-1)]`.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::bracket::{enumerate_canonical, generator_count, Bracket, CanonicalBracket};
use crate::characters::{decompose, ClassFunction, Decomposition};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, kernel_dim, rank, rref, restricted_trace, RankPolicy, RankReport, SparseRationalMatrix};
use crate::perm::Permutation;

type SparseRow = Vec<(usize, BigRational)>;

/// Size bounds for the engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest canonical basis that will be enumerated.
    pub max_basis: usize,
    /// Largest number of relation rows that will be generated.
    pub max_relation_rows: usize,
    /// Largest basis for which characters are computed (each class needs an
    /// exact echelon form of the relations).
    pub max_character_basis: usize,
    /// Largest `n` for the `φ` operator and standard basis checks.
    pub max_phi_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 100_000, max_relation_rows: 1_000_000, max_character_basis: 2_000, max_phi_n: 8 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineConfig {
    pub limits: Limits,
    pub rank: RankPolicy,
}

/// `V_{n,k}`: the span of canonical bracketed permutations on `[m]`.
#[derive(Clone, Debug)]
pub struct VSpace {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    basis: Vec<CanonicalBracket>,
    index: HashMap<Bracket, usize>,
}

impl VSpace {
    pub fn new(n: usize, k: usize, limits: &Limits) -> Result<Self> {
        let m = generator_count(n, k)?;
        let basis = enumerate_canonical(n, k, limits.max_basis)?;
        let index = basis.iter().enumerate().map(|(i, b)| (b.tree().clone(), i)).collect();
        Ok(VSpace { n, k, m, basis, index })
    }

    pub fn basis(&self) -> &[CanonicalBracket] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, canonical: &Bracket) -> Option<usize> {
        self.index.get(canonical).copied()
    }

    /// Coordinates of an arbitrary multilinear word: `(basis index, ±1)`.
    pub fn expand(&self, word: &Bracket) -> (usize, i32) {
        let (tree, sign) = word.canonical_form();
        let idx = *self
            .index
            .get(&tree)
            .unwrap_or_else(|| panic!("{word} is not a word of V_({},{})", self.n, self.k));
        (idx, sign)
    }

    /// Image of each basis element under `σ`: `σ · b_i = sign · b_j`.
    pub fn permutation_action(&self, sigma: &Permutation) -> Vec<(usize, i32)> {
        assert_eq!(sigma.degree(), self.m);
        self.basis
            .iter()
            .map(|b| self.expand(&b.tree().relabel(&|x| sigma.apply(x))))
            .collect()
    }

    /// The action as a matrix on row vectors (`v ↦ v·G`).
    pub fn action_matrix(&self, sigma: &Permutation) -> SparseRationalMatrix {
        let action = self.permutation_action(sigma);
        SparseRationalMatrix::from_triplets(
            self.dim(),
            self.dim(),
            action
                .into_iter()
                .enumerate()
                .map(|(i, (j, s))| (i, j, BigRational::from_integer(s.into()))),
        )
        .expect("indices in range")
    }

    /// `χ_V(σ)`: the signed count of basis elements fixed up to sign.
    pub fn signed_fixed_points(&self, sigma: &Permutation) -> i64 {
        self.permutation_action(sigma)
            .into_iter()
            .enumerate()
            .filter(|(i, (j, _))| i == j)
            .map(|(_, (_, s))| s as i64)
            .sum()
    }

    /// Character of `V_{n,k}`.
    pub fn character(&self) -> ClassFunction {
        ClassFunction::from_fn(self.m, |mu| {
            BigRational::from_integer(self.signed_fixed_points(&Permutation::with_cycle_type(mu)).into())
        })
    }
}

/// Where a relation row came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationOrigin {
    /// Basis index of the tree the rewrite was read off.
    pub tree: usize,
    /// Path from the root to the node `P` whose child is expanded.
    pub node: Vec<usize>,
    /// Position of the expanded bracket among the children of `P`.
    pub child: usize,
}

/// Generalized Jacobi relations as rows over the basis of a [`VSpace`].
#[derive(Clone, Debug)]
pub struct RelationSet {
    pub matrix: SparseRationalMatrix,
    pub provenance: Vec<RelationOrigin>,
}

/// The relation obtained by expanding child `child` of the node at `node`.
fn jacobi_row(space: &VSpace, tree: &Bracket, node: &[usize], child: usize) -> Vec<(usize, BigRational)> {
    let parent = tree.at(node).children();
    let inner = parent[child].children();
    let others: Vec<Bracket> = parent
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != child)
        .map(|(_, b)| b.clone())
        .collect();

    let mut row: BTreeMap<usize, i64> = BTreeMap::new();
    let mut add = |word: Bracket, coef: i64| {
        let (idx, sign) = space.expand(&tree.replace(node, word));
        *row.entry(idx).or_insert(0) += coef * sign as i64;
    };

    let mut lhs = vec![parent[child].clone()];
    lhs.extend(others.iter().cloned());
    add(Bracket::Node(lhs), 1);
    for i in 0..inner.len() {
        let mut nested = vec![inner[i].clone()];
        nested.extend(others.iter().cloned());
        let mut term = inner.to_vec();
        term[i] = Bracket::Node(nested);
        add(Bracket::Node(term), -1);
    }
    row.into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(i, c)| (i, BigRational::from_integer(c.into())))
        .collect()
}

/// Every instance of the Jacobi identity in every context, one row per
/// (basis tree, node, bracketed child). Rows equal up to sign are kept.
pub fn jacobi_relations(space: &VSpace, limits: &Limits) -> Result<RelationSet> {
    // every non-root bracket is the bracketed child of exactly one node
    let expected = space.dim().saturating_mul(space.k - 2);
    if expected > limits.max_relation_rows {
        return Err(Error::BoundExceeded { what: "relation rows", size: expected, bound: limits.max_relation_rows });
    }
    let per_tree: Vec<Vec<(RelationOrigin, SparseRow)>> = space
        .basis
        .par_iter()
        .enumerate()
        .map(|(t, b)| {
            let tree = b.tree();
            let mut out = Vec::new();
            for path in tree.internal_paths() {
                for (ci, c) in tree.at(&path).children().iter().enumerate() {
                    if c.is_leaf() {
                        continue;
                    }
                    let row = jacobi_row(space, tree, &path, ci);
                    out.push((RelationOrigin { tree: t, node: path.clone(), child: ci }, row));
                }
            }
            out
        })
        .collect();
    let mut matrix = SparseRationalMatrix::empty(space.dim());
    let mut provenance = Vec::new();
    for (origin, row) in per_tree.into_iter().flatten() {
        matrix.push_row(row)?;
        provenance.push(origin);
    }
    debug_assert_eq!(matrix.n_rows(), expected);
    Ok(RelationSet { matrix, provenance })
}

/// Dimension report for `ρ_{n,k}`.
#[derive(Clone, Debug, Serialize)]
pub struct DimReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub basis_size: usize,
    pub relation_rows: usize,
    pub relation_rank: usize,
    pub dim: usize,
    pub rank: RankReport,
}

/// `dim ρ_{n,k} = dim V_{n,k} - rank(relations)`.
pub fn dim_rho(n: usize, k: usize, cfg: &EngineConfig) -> Result<DimReport> {
    let space = VSpace::new(n, k, &cfg.limits)?;
    let relations = jacobi_relations(&space, &cfg.limits)?;
    let rank = cfg.rank.rank(&relations.matrix)?;
    Ok(DimReport {
        n,
        k,
        m: space.m,
        basis_size: space.dim(),
        relation_rows: relations.matrix.n_rows(),
        relation_rank: rank.rank,
        dim: space.dim() - rank.rank,
        rank,
    })
}

/// Character of `ρ_{n,k}`: `χ_V - χ_R`, with `χ_R(g)` the trace of `g` on
/// the relation row space.
pub fn character_rho(n: usize, k: usize, cfg: &EngineConfig) -> Result<ClassFunction> {
    let space = VSpace::new(n, k, &cfg.limits)?;
    if space.dim() > cfg.limits.max_character_basis {
        return Err(Error::BoundExceeded {
            what: "basis size for characters",
            size: space.dim(),
            bound: cfg.limits.max_character_basis,
        });
    }
    let relations = jacobi_relations(&space, &cfg.limits)?;
    let echelon = rref(&relations.matrix);
    let classes = crate::combinatorics::partitions(space.m);
    let values = classes
        .par_iter()
        .map(|mu| {
            let g = Permutation::with_cycle_type(mu);
            let chi_v = BigRational::from_integer(space.signed_fixed_points(&g).into());
            let chi_r = restricted_trace(&space.action_matrix(&g), &echelon)?;
            Ok(chi_v - chi_r)
        })
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(space.m, values)
}

/// Irreducible decomposition of `ρ_{n,k}`.
pub fn decomposition_rho(n: usize, k: usize, cfg: &EngineConfig) -> Result<Decomposition> {
    decompose(&character_rho(n, k, cfg)?)
}

// ---------------------------------------------------------------------
// k = 3: the operator φ

/// `n`-subsets of `[2n-1]` in lexicographic order.
pub fn subsets(n: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, max: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..=max {
            if (max - x + 1) as usize >= left {
                cur.push(x);
                go(x + 1, max, left - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(1, (2 * n - 1) as u32, n, &mut Vec::new(), &mut out);
    out
}

/// `v_S = [[a1..an], b1..b(n-1)]` with both lists increasing.
pub fn v_s(n: usize, s: &[u32]) -> Bracket {
    let m = (2 * n - 1) as u32;
    let mut children = vec![Bracket::Node(s.iter().map(|&a| Bracket::Leaf(a)).collect())];
    children.extend((1..=m).filter(|x| !s.contains(x)).map(Bracket::Leaf));
    Bracket::Node(children)
}

fn check_subset(n: usize, s: &[u32]) -> Result<()> {
    let m = (2 * n - 1) as u32;
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != n || s.len() != n || sorted.iter().any(|&x| x == 0 || x > m) {
        return Err(Error::Invalid(format!("{s:?} is not an {n}-subset of [{m}]")));
    }
    Ok(())
}

/// `⟨φ(v_S), v_T⟩`: 1 when `S = T`, `(-1)^d` when `S ∩ T = {d}`, else 0.
pub fn phi_entry(n: usize, s: &[u32], t: &[u32]) -> Result<i32> {
    check_subset(n, s)?;
    check_subset(n, t)?;
    let mut s_sorted = s.to_vec();
    let mut t_sorted = t.to_vec();
    s_sorted.sort_unstable();
    t_sorted.sort_unstable();
    if s_sorted == t_sorted {
        return Ok(1);
    }
    let common: Vec<u32> = s_sorted.iter().copied().filter(|x| t_sorted.contains(x)).collect();
    Ok(match common[..] {
        [d] => {
            if d % 2 == 0 {
                1
            } else {
                -1
            }
        }
        _ => 0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhiMethod {
    /// Fill entries from the closed-form coefficient rule.
    ClosedForm,
    /// Expand each `R_S` by canonicalizing its bracketed terms.
    Definitional,
}

/// The matrix of `φ` in the basis `{v_S}` (lexicographic `S`), with
/// `entry(T, S) = ⟨φ(v_S), v_T⟩` so that `φ` acts on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMatrix {
    pub n: usize,
    pub matrix: SparseRationalMatrix,
}

fn check_phi_n(n: usize, limits: &Limits) -> Result<()> {
    if n < 2 {
        return Err(Error::Invalid(format!("φ needs n >= 2, got {n}")));
    }
    if n > limits.max_phi_n {
        return Err(Error::BoundExceeded { what: "n for φ", size: n, bound: limits.max_phi_n });
    }
    Ok(())
}

/// Coordinates of `word` in the `v_S` basis: `(index of S, ±1)`.
///
/// Canonical words differ from `v_S` by a sign when `1 ∉ S` (the inner
/// bracket is then not the first child); the sign is read off by
/// canonicalizing `v_S` itself.
struct VsCoordinates<'a> {
    space: &'a VSpace,
    /// `v_S = eps[i] · canonical basis element i`
    eps: Vec<i32>,
}

impl<'a> VsCoordinates<'a> {
    fn new(space: &'a VSpace, n: usize) -> Self {
        let subs = subsets(n);
        let mut eps = vec![0; subs.len()];
        for s in &subs {
            let (idx, sign) = space.expand(&v_s(n, s));
            eps[idx] = sign;
        }
        debug_assert!(subs.iter().enumerate().all(|(i, s)| space.expand(&v_s(n, s)).0 == i));
        VsCoordinates { space, eps }
    }

    fn expand(&self, word: &Bracket) -> (usize, i32) {
        let (idx, sign) = self.space.expand(word);
        (idx, sign * self.eps[idx])
    }
}

impl PhiMatrix {
    pub fn build(n: usize, method: PhiMethod, limits: &Limits) -> Result<PhiMatrix> {
        check_phi_n(n, limits)?;
        let subs = subsets(n);
        let dim = subs.len();
        let triplets: Vec<(usize, usize, BigRational)> = match method {
            PhiMethod::ClosedForm => subs
                .par_iter()
                .enumerate()
                .flat_map_iter(|(si, s)| {
                    subs.iter().enumerate().filter_map(move |(ti, t)| {
                        let e = phi_entry(n, s, t).expect("valid subsets");
                        (e != 0).then(|| (ti, si, BigRational::from_integer(e.into())))
                    })
                })
                .collect(),
            PhiMethod::Definitional => {
                let space = VSpace::new(n, 3, limits)?;
                let coords = VsCoordinates::new(&space, n);
                let m = (2 * n - 1) as u32;
                subs.par_iter()
                    .enumerate()
                    .flat_map_iter(|(si, s)| {
                        let b: Vec<Bracket> = (1..=m).filter(|x| !s.contains(x)).map(Bracket::Leaf).collect();
                        let mut col: BTreeMap<usize, i64> = BTreeMap::new();
                        let (idx, sign) = coords.expand(&v_s(n, s));
                        *col.entry(idx).or_insert(0) += sign as i64;
                        for i in 0..n {
                            let mut inner = vec![Bracket::Leaf(s[i])];
                            inner.extend(b.iter().cloned());
                            let mut outer: Vec<Bracket> = s.iter().map(|&a| Bracket::Leaf(a)).collect();
                            outer[i] = Bracket::Node(inner);
                            let (idx, sign) = coords.expand(&Bracket::Node(outer));
                            *col.entry(idx).or_insert(0) -= sign as i64;
                        }
                        col.into_iter()
                            .filter(|&(_, c)| c != 0)
                            .map(move |(ti, c)| (ti, si, BigRational::from_integer(c.into())))
                    })
                    .collect()
            }
        };
        Ok(PhiMatrix { n, matrix: SparseRationalMatrix::from_triplets(dim, dim, triplets)? })
    }

    pub fn dim(&self) -> usize {
        self.matrix.n_rows()
    }

    pub fn entry(&self, t: usize, s: usize) -> BigRational {
        self.matrix.get(t, s)
    }

    pub fn trace(&self) -> BigRational {
        self.matrix.trace()
    }

    pub fn kernel_dim(&self) -> usize {
        kernel_dim(&self.matrix)
    }

    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        kernel_basis(&self.matrix)
    }
}

/// Matrix of `σ` on the `v_S` basis, columns are images: `P[T][S]` is the
/// coefficient of `v_T` in `σ · v_S`.
pub fn v_basis_action(n: usize, sigma: &Permutation, limits: &Limits) -> Result<SparseRationalMatrix> {
    check_phi_n(n, limits)?;
    if sigma.degree() != 2 * n - 1 {
        return Err(Error::NotAPermutation(format!("degree {} on [{}]", sigma.degree(), 2 * n - 1)));
    }
    let space = VSpace::new(n, 3, limits)?;
    let coords = VsCoordinates::new(&space, n);
    let subs = subsets(n);
    SparseRationalMatrix::from_triplets(
        subs.len(),
        subs.len(),
        subs.iter().enumerate().map(|(si, s)| {
            let (ti, sign) = coords.expand(&v_s(n, s).relabel(&|x| sigma.apply(x)));
            (ti, si, BigRational::from_integer(sign.into()))
        }),
    )
}

/// `w_i = 1 + (n - i)(-1)^(n - i)`.
pub fn eigenvalue(n: usize, i: usize) -> i64 {
    let j = (n - i) as i64;
    1 + if j % 2 == 0 { j } else { -j }
}

/// Shape `2^i 1^(2n-1-2i)`.
pub fn constituent_shape(n: usize, i: usize) -> Partition {
    let mut parts = vec![2; i];
    parts.extend(std::iter::repeat_n(1, 2 * n - 1 - 2 * i));
    Partition::new(parts).expect("valid shape")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eigenspace {
    pub i: usize,
    pub eigenvalue: i64,
    pub shape: Partition,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub n: usize,
    pub eigenspaces: Vec<Eigenspace>,
}

impl Spectrum {
    /// `{eigenvalue → multiplicity}`.
    pub fn to_map(&self) -> BTreeMap<i64, usize> {
        self.eigenspaces.iter().map(|e| (e.eigenvalue, e.multiplicity)).collect()
    }
}

/// Multiplicities of the candidate eigenvalues `w_i` of `φ`, found as exact
/// kernel dimensions of `Φ - w_i I`. Fails when a multiplicity differs from
/// `f^{2^i 1^(2n-1-2i)}` or the eigenspaces do not fill the space.
pub fn phi_spectrum(n: usize, limits: &Limits) -> Result<Spectrum> {
    spectrum_of(&PhiMatrix::build(n, PhiMethod::Definitional, limits)?)
}

pub fn spectrum_of(phi: &PhiMatrix) -> Result<Spectrum> {
    let n = phi.n;
    let eigenspaces: Vec<Eigenspace> = (0..n)
        .into_par_iter()
        .map(|i| {
            let w = eigenvalue(n, i);
            let shifted = phi.matrix.shift_diagonal(&BigRational::from_integer(w.into()));
            Eigenspace { i, eigenvalue: w, shape: constituent_shape(n, i), multiplicity: kernel_dim(&shifted) }
        })
        .collect();
    let total: usize = eigenspaces.iter().map(|e| e.multiplicity).sum();
    if total != phi.dim() {
        return Err(Error::TheoremViolation(format!(
            "eigenspaces of φ for n={n} have total dimension {total}, expected {}",
            phi.dim()
        )));
    }
    for e in &eigenspaces {
        let expected = e.shape.hook_dim() as usize;
        if e.multiplicity != expected {
            return Err(Error::TheoremViolation(format!(
                "eigenvalue {} of φ (n={n}) has multiplicity {}, expected f^({}) = {expected}",
                e.eigenvalue, e.multiplicity, e.shape
            )));
        }
    }
    Ok(Spectrum { n, eigenspaces })
}

/// Standard bracketed permutations `[[a1..an], b1..b(n-1)]` with
/// `a_i < b_i`, checked to be independent modulo the Jacobi relations.
pub fn standard_brackets(n: usize, limits: &Limits) -> Result<Vec<CanonicalBracket>> {
    check_phi_n(n, limits)?;
    let space = VSpace::new(n, 3, limits)?;
    let standard: Vec<CanonicalBracket> = subsets(n)
        .into_iter()
        .filter(|s| {
            let m = (2 * n - 1) as u32;
            let b: Vec<u32> = (1..=m).filter(|x| !s.contains(x)).collect();
            b.iter().zip(s).all(|(bi, ai)| ai < bi)
        })
        .map(|s| {
            let tree = v_s(n, &s);
            debug_assert!(tree.is_canonical());
            CanonicalBracket::from_canonical_tree(n, tree)
        })
        .collect();

    let relations = jacobi_relations(&space, limits)?;
    let base_rank = rank(&relations.matrix);
    let mut stacked = relations.matrix.clone();
    for b in &standard {
        let idx = space.index_of(b.tree()).expect("standard words are basis words");
        stacked.push_row(vec![(idx, BigRational::one())])?;
    }
    let total = rank(&stacked);
    if total != base_rank + standard.len() {
        return Err(Error::TheoremViolation(format!(
            "standard brackets for n={n} span {} dimensions modulo relations, expected {}",
            total - base_rank,
            standard.len()
        )));
    }
    Ok(standard)
}

/// `C(2n-1, n)`, the dimension of `V_{n,3}`.
pub fn v_dimension(n: usize) -> usize {
    subsets_count(2 * n - 1, n)
}

fn subsets_count(m: usize, r: usize) -> usize {
    (0..r).fold(1usize, |acc, i| acc * (m - i) / (i + 1))
}

/// The `n`-th Catalan number.
pub fn catalan(n: usize) -> usize {
    subsets_count(2 * n, n) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn relation_counts_and_ranks() {
        let l = Limits::default();
        let space = VSpace::new(2, 3, &l).unwrap();
        let rel = jacobi_relations(&space, &l).unwrap();
        assert_eq!(rel.matrix.n_rows(), 3);
        assert_eq!(rank(&rel.matrix), 1);
        // R_{12} in the canonical basis [[1,2],3], [[1,3],2], [1,[2,3]]:
        // v12 - v13 + v23 with v23 = [[2,3],1] = -[1,[2,3]]
        assert_eq!(rel.matrix.row(0), &[(0, q(1)), (1, q(-1)), (2, q(-1))]);

        let space = VSpace::new(3, 3, &l).unwrap();
        let rel = jacobi_relations(&space, &l).unwrap();
        assert_eq!(rel.matrix.n_rows(), 10);
        assert_eq!(rank(&rel.matrix), 5);

        let space = VSpace::new(2, 4, &l).unwrap();
        let rel = jacobi_relations(&space, &l).unwrap();
        assert_eq!(rank(&rel.matrix), 9);
        assert!(rel.matrix.rows().iter().all(|r| r.len() <= 3));
    }

    #[test]
    fn dims() {
        assert_eq!(dim_rho(2, 4, &cfg()).unwrap().dim, 6);
        assert_eq!(dim_rho(3, 3, &cfg()).unwrap().dim, 5);
        for n in 2..=5 {
            assert_eq!(dim_rho(n, 2, &cfg()).unwrap().dim, 1);
        }
    }

    #[test]
    fn characters() {
        use crate::characters::irreducible_character;
        let c = character_rho(2, 3, &cfg()).unwrap();
        assert_eq!(c, irreducible_character(&"2,1".parse().unwrap()).unwrap());
        let c = character_rho(3, 3, &cfg()).unwrap();
        assert_eq!(c, irreducible_character(&"2,2,1".parse().unwrap()).unwrap());
        for n in 2..=5 {
            assert_eq!(character_rho(n, 2, &cfg()).unwrap(), ClassFunction::sign(n));
        }
    }

    #[test]
    fn phi_entry_examples() {
        assert_eq!(phi_entry(3, &[1, 2, 3], &[1, 2, 3]).unwrap(), 1);
        assert_eq!(phi_entry(2, &[1, 2], &[2, 3]).unwrap(), 1);
        assert_eq!(phi_entry(3, &[1, 2, 3], &[1, 2, 5]).unwrap(), 0);
        assert_eq!(phi_entry(4, &[1, 2, 3, 4], &[1, 2, 6, 7]).unwrap(), 0);
        assert!(phi_entry(3, &[1, 2], &[1, 2, 3]).is_err());
        assert!(phi_entry(2, &[1, 1], &[1, 2]).is_err());
        assert!(phi_entry(2, &[1, 4], &[1, 2]).is_err());
    }

    #[test]
    fn phi_matrix_n2() {
        let l = Limits::default();
        let phi = PhiMatrix::build(2, PhiMethod::Definitional, &l).unwrap();
        let expected = SparseRationalMatrix::from_dense(&[vec![1, -1, 1], vec![-1, 1, -1], vec![1, -1, 1]]);
        assert_eq!(phi.matrix, expected);
        assert_eq!(PhiMatrix::build(2, PhiMethod::ClosedForm, &l).unwrap(), phi);
        assert_eq!(phi.trace(), q(3));
        assert_eq!(PhiMatrix::build(3, PhiMethod::ClosedForm, &l).unwrap().trace(), q(10));
        assert_eq!(phi.kernel_dim(), 2);
    }

    #[test]
    fn spectra() {
        let l = Limits::default();
        let s = phi_spectrum(2, &l).unwrap().to_map();
        assert_eq!(s, BTreeMap::from([(3, 1), (0, 2)]));
        let s = phi_spectrum(3, &l).unwrap().to_map();
        assert_eq!(s, BTreeMap::from([(-2, 1), (3, 4), (0, 5)]));
    }

    #[test]
    fn spectrum_detects_perturbation() {
        let l = Limits::default();
        let mut phi = PhiMatrix::build(3, PhiMethod::ClosedForm, &l).unwrap();
        phi.matrix = phi.matrix.shift_diagonal(&q(1));
        assert!(matches!(spectrum_of(&phi), Err(Error::TheoremViolation(_))));
    }

    #[test]
    fn standard_basis() {
        let l = Limits::default();
        let s: Vec<String> = standard_brackets(2, &l).unwrap().iter().map(|b| b.to_string()).collect();
        assert_eq!(s, ["[[1,2],3]", "[[1,3],2]"]);
        assert_eq!(standard_brackets(3, &l).unwrap().len(), 5);
        assert_eq!(standard_brackets(4, &l).unwrap().len(), 14);
    }

    #[test]
    fn catalan_numbers() {
        let c: Vec<usize> = (1..=8).map(catalan).collect();
        assert_eq!(c, [1, 2, 5, 14, 42, 132, 429, 1430]);
        assert_eq!(v_dimension(3), 10);
    }

    #[test]
    fn bounds_are_enforced() {
        let tight = Limits { max_basis: 10, ..Limits::default() };
        assert!(matches!(VSpace::new(2, 5, &tight), Err(Error::BoundExceeded { .. })));
        let no_chars = EngineConfig { limits: Limits { max_character_basis: 5, ..Limits::default() }, ..cfg() };
        assert!(matches!(character_rho(3, 3, &no_chars), Err(Error::BoundExceeded { .. })));
        let rows = Limits { max_relation_rows: 5, ..Limits::default() };
        let space = VSpace::new(3, 3, &rows).unwrap();
        assert!(matches!(jacobi_relations(&space, &rows), Err(Error::BoundExceeded { .. })));
        assert!(matches!(
            PhiMatrix::build(9, PhiMethod::ClosedForm, &Limits::default()),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
