//! Bracketed permutations: `n`-ary trees with distinct integer leaves.
//!
//! An antisymmetric bracket lets any word be rewritten, up to sign, in a
//! canonical form where the children of every node are sorted by the
//! smallest leaf of their subtree. Sibling subtrees of a multilinear word
//! have disjoint leaf sets, so this order never ties.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::perm::{sort_sign, Permutation};

/// Nesting depth accepted by the text parser.
pub const MAX_PARSE_DEPTH: usize = 256;

/// Default cap on the number of canonical words [`enumerate_canonical`]
/// will materialise.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 200_000;

/// A bracketed word: a leaf or a node with ordered children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bracket {
    Leaf(u32),
    Node(Vec<Bracket>),
}

impl Bracket {
    pub fn node(children: Vec<Bracket>) -> Self {
        Bracket::Node(children)
    }

    pub fn min_leaf(&self) -> u32 {
        match self {
            Bracket::Leaf(x) => *x,
            Bracket::Node(ch) => ch.iter().map(Bracket::min_leaf).min().unwrap_or(u32::MAX),
        }
    }

    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u32>) {
        match self {
            Bracket::Leaf(x) => out.push(*x),
            Bracket::Node(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn internal_count(&self) -> usize {
        match self {
            Bracket::Leaf(_) => 0,
            Bracket::Node(ch) => 1 + ch.iter().map(Bracket::internal_count).sum::<usize>(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Bracket::Leaf(_))
    }

    pub fn children(&self) -> &[Bracket] {
        match self {
            Bracket::Leaf(_) => &[],
            Bracket::Node(ch) => ch,
        }
    }

    /// Paths (child indices from the root) of the internal nodes, preorder.
    pub fn internal_paths(&self) -> Vec<Vec<usize>> {
        fn go(b: &Bracket, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if let Bracket::Node(ch) = b {
                out.push(path.clone());
                for (i, c) in ch.iter().enumerate() {
                    path.push(i);
                    go(c, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn at(&self, path: &[usize]) -> &Bracket {
        path.iter().fold(self, |b, &i| &b.children()[i])
    }

    /// Copy of `self` with the subtree at `path` replaced.
    pub fn replace(&self, path: &[usize], with: Bracket) -> Bracket {
        match path.split_first() {
            None => with,
            Some((&i, rest)) => {
                let Bracket::Node(ch) = self else { panic!("path runs through a leaf") };
                let mut ch = ch.clone();
                ch[i] = ch[i].replace(rest, with);
                Bracket::Node(ch)
            }
        }
    }

    /// Sorts every node's children by minimal leaf, returning the sorted
    /// tree and the product of the sorting signs.
    pub fn canonical_form(&self) -> (Bracket, i32) {
        match self {
            Bracket::Leaf(x) => (Bracket::Leaf(*x), 1),
            Bracket::Node(ch) => {
                let mut sign = 1;
                let mut kids: Vec<(u32, Bracket)> = ch
                    .iter()
                    .map(|c| {
                        let (cb, s) = c.canonical_form();
                        sign *= s;
                        (cb.min_leaf(), cb)
                    })
                    .collect();
                let mins: Vec<u32> = kids.iter().map(|k| k.0).collect();
                sign *= sort_sign(&mins);
                kids.sort_by_key(|k| k.0);
                (Bracket::Node(kids.into_iter().map(|k| k.1).collect()), sign)
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            Bracket::Leaf(_) => true,
            Bracket::Node(ch) => {
                ch.windows(2).all(|w| w[0].min_leaf() < w[1].min_leaf())
                    && ch.iter().all(Bracket::is_canonical)
            }
        }
    }

    pub fn relabel(&self, f: &impl Fn(u32) -> u32) -> Bracket {
        match self {
            Bracket::Leaf(x) => Bracket::Leaf(f(*x)),
            Bracket::Node(ch) => Bracket::Node(ch.iter().map(|c| c.relabel(f)).collect()),
        }
    }

    /// Sorted leaf sets of the internal nodes in preorder. Determines the
    /// tree, and orders canonical words deterministically.
    pub fn order_key(&self) -> Vec<Vec<u32>> {
        fn go(b: &Bracket, out: &mut Vec<Vec<u32>>) {
            if let Bracket::Node(ch) = b {
                let mut leaves = b.leaves();
                leaves.sort_unstable();
                out.push(leaves);
                ch.iter().for_each(|c| go(c, out));
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    fn check_arity(&self, n: usize) -> bool {
        match self {
            Bracket::Leaf(_) => true,
            Bracket::Node(ch) => ch.len() == n && ch.iter().all(|c| c.check_arity(n)),
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Leaf(x) => write!(f, "{x}"),
            Bracket::Node(ch) => {
                write!(f, "[")?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn item(&mut self, depth: usize) -> Result<Bracket> {
        if depth > MAX_PARSE_DEPTH {
            return Err(self.err("nesting too deep"));
        }
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'[') => {
                self.pos += 1;
                let mut children = vec![self.item(depth + 1)?];
                loop {
                    self.skip_ws();
                    match self.bytes.get(self.pos) {
                        Some(b',') => {
                            self.pos += 1;
                            children.push(self.item(depth + 1)?);
                        }
                        Some(b']') => {
                            self.pos += 1;
                            return Ok(Bracket::Node(children));
                        }
                        _ => return Err(self.err("expected ',' or ']'")),
                    }
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
                text.parse::<u32>()
                    .map(Bracket::Leaf)
                    .map_err(|_| self.err("leaf label out of range"))
            }
            _ => Err(self.err("expected '[' or a leaf label")),
        }
    }
}

impl FromStr for Bracket {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { bytes: s.as_bytes(), pos: 0 };
        let b = p.item(0)?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(b)
    }
}

/// A bracketed word whose nodes all have arity `n` and whose leaves are
/// distinct positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketedWord {
    arity: usize,
    tree: Bracket,
}

impl BracketedWord {
    pub fn new(tree: Bracket) -> Result<Self> {
        let Bracket::Node(ch) = &tree else {
            return Err(Error::Invalid("a bracketed word needs at least one bracket".into()));
        };
        let arity = ch.len();
        if arity < 2 {
            return Err(Error::Invalid("brackets need arity at least 2".into()));
        }
        if !tree.check_arity(arity) {
            return Err(Error::Invalid(format!("mixed bracket arities in {tree}")));
        }
        let mut seen = HashSet::new();
        for x in tree.leaves() {
            if x == 0 {
                return Err(Error::Invalid("leaf labels start at 1".into()));
            }
            if !seen.insert(x) {
                return Err(Error::RepeatedLeaf(x));
            }
        }
        Ok(BracketedWord { arity, tree })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tree(&self) -> &Bracket {
        &self.tree
    }

    /// Number of brackets plus one.
    pub fn k(&self) -> usize {
        self.tree.internal_count() + 1
    }

    /// True when the leaves are exactly `1..=m`.
    pub fn is_multilinear(&self) -> bool {
        let mut leaves = self.tree.leaves();
        leaves.sort_unstable();
        leaves.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn canonicalize(&self) -> SignedBracket {
        let (tree, sign) = self.tree.canonical_form();
        SignedBracket { word: CanonicalBracket { arity: self.arity, tree }, sign }
    }
}

impl FromStr for BracketedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BracketedWord::new(s.parse()?)
    }
}

impl fmt::Display for BracketedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.fmt(f)
    }
}

/// A bracketed word in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalBracket {
    arity: usize,
    tree: Bracket,
}

impl CanonicalBracket {
    pub fn new(word: &BracketedWord) -> Result<Self> {
        if !word.tree.is_canonical() {
            return Err(Error::Invalid(format!("{word} is not in canonical form")));
        }
        Ok(CanonicalBracket { arity: word.arity, tree: word.tree.clone() })
    }

    /// Wraps a tree already known to be canonical.
    pub(crate) fn from_canonical_tree(arity: usize, tree: Bracket) -> Self {
        debug_assert!(tree.is_canonical());
        CanonicalBracket { arity, tree }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tree(&self) -> &Bracket {
        &self.tree
    }

    pub fn into_tree(self) -> Bracket {
        self.tree
    }

    pub fn to_word(&self) -> BracketedWord {
        BracketedWord { arity: self.arity, tree: self.tree.clone() }
    }
}

impl fmt::Display for CanonicalBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.fmt(f)
    }
}

/// `sign · word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedBracket {
    pub word: CanonicalBracket,
    pub sign: i32,
}

impl fmt::Display for SignedBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "+" };
        write!(f, "{s}{}", self.word)
    }
}

/// `kn - n - k + 2`: letters in a multilinear word with `k - 1` brackets of
/// arity `n`.
pub fn generator_count(n: usize, k: usize) -> Result<usize> {
    if n < 2 || k < 2 {
        return Err(Error::Invalid(format!("need n, k >= 2, got n={n}, k={k}")));
    }
    Ok(k * n + 2 - n - k)
}

pub fn canonicalize(word: &BracketedWord) -> SignedBracket {
    word.canonicalize()
}

/// Relabels every leaf `x` as `σ(x)` and canonicalizes.
pub fn act(sigma: &Permutation, b: &CanonicalBracket) -> Result<SignedBracket> {
    let m = sigma.degree();
    let leaves = b.tree.leaves();
    if leaves.len() != m || leaves.iter().any(|&x| x == 0 || x as usize > m) {
        return Err(Error::NotAPermutation(format!(
            "permutation of degree {m} cannot act on {}",
            b.tree
        )));
    }
    let (tree, sign) = b.tree.relabel(&|x| sigma.apply(x)).canonical_form();
    Ok(SignedBracket { word: CanonicalBracket { arity: b.arity, tree }, sign })
}

/// Number of canonical multilinear words with `k - 1` brackets of arity `n`,
/// read off the exponential generating function `A = x + A^n / n!`.
pub fn canonical_count(n: usize, k: usize) -> Result<BigInt> {
    let m = generator_count(n, k)?;
    let mut fact = vec![BigRational::one()];
    for i in 1..=m.max(n) {
        fact.push(&fact[i - 1] * BigRational::from_integer(i.into()));
    }
    // truncated power series, coefficient of x^d at index d
    let mul = |a: &[BigRational], b: &[BigRational]| {
        let mut out = vec![BigRational::zero(); m + 1];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().take(m + 1 - i) {
                out[i + j] += x * y;
            }
        }
        out
    };
    let mut a = vec![BigRational::zero(); m + 1];
    a[1] = BigRational::one();
    for _ in 0..k {
        let mut power = a.clone();
        for _ in 1..n {
            power = mul(&power, &a);
        }
        let mut next: Vec<BigRational> = power.iter().map(|c| c / &fact[n]).collect();
        next[1] += BigRational::one();
        a = next;
    }
    Ok((&a[m] * &fact[m]).to_integer())
}

fn leaves_for(internal: usize, n: usize) -> usize {
    internal * (n - 1) + 1
}

/// Set partitions of `items` into exactly `n` blocks ordered by minimum,
/// each block size congruent to 1 mod `n - 1`.
fn ordered_blocks(items: &[u32], n: usize) -> Vec<Vec<Vec<u32>>> {
    fn go(items: &[u32], idx: usize, n: usize, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let remaining = items.len() - idx;
        if blocks.len() + remaining < n {
            return;
        }
        if idx == items.len() {
            if blocks.iter().all(|b| (b.len() - 1) % (n - 1) == 0) {
                out.push(blocks.clone());
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(items[idx]);
            go(items, idx + 1, n, blocks, out);
            blocks[i].pop();
        }
        if blocks.len() < n {
            blocks.push(vec![items[idx]]);
            go(items, idx + 1, n, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, n, &mut Vec::new(), &mut out);
    out
}

fn canonical_trees(items: &[u32], n: usize) -> Vec<Bracket> {
    if items.len() == 1 {
        return vec![Bracket::Leaf(items[0])];
    }
    let mut out = Vec::new();
    for blocks in ordered_blocks(items, n) {
        let options: Vec<Vec<Bracket>> = blocks.iter().map(|b| canonical_trees(b, n)).collect();
        let mut idx = vec![0usize; n];
        'product: loop {
            out.push(Bracket::Node(idx.iter().zip(&options).map(|(&i, o)| o[i].clone()).collect()));
            for d in (0..n).rev() {
                idx[d] += 1;
                if idx[d] < options[d].len() {
                    continue 'product;
                }
                idx[d] = 0;
            }
            break;
        }
    }
    out
}

/// All canonical multilinear words on `[m]` with `k - 1` brackets of arity
/// `n`, sorted by [`Bracket::order_key`]. For `k = 3` this is the order of
/// the inner bracket's leaf set, lexicographically.
pub fn enumerate_canonical(n: usize, k: usize, limit: usize) -> Result<Vec<CanonicalBracket>> {
    let m = generator_count(n, k)?;
    debug_assert_eq!(m, leaves_for(k - 1, n));
    let count = canonical_count(n, k)?;
    let count = count.to_usize().filter(|&c| c <= limit).ok_or(Error::BoundExceeded {
        what: "canonical basis size",
        size: count.to_usize().unwrap_or(usize::MAX),
        bound: limit,
    })?;
    let items: Vec<u32> = (1..=m as u32).collect();
    let mut trees = canonical_trees(&items, n);
    debug_assert_eq!(trees.len(), count);
    trees.sort_by_cached_key(Bracket::order_key);
    Ok(trees
        .into_iter()
        .map(|tree| CanonicalBracket { arity: n, tree })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BracketedWord {
        s.parse().unwrap()
    }

    #[test]
    fn generator_counts() {
        assert_eq!(generator_count(3, 3).unwrap(), 5);
        assert_eq!(generator_count(3, 4).unwrap(), 7);
        for k in 2..10 {
            assert_eq!(generator_count(2, k).unwrap(), k);
        }
        assert!(generator_count(1, 3).is_err());
        assert!(generator_count(3, 1).is_err());
    }

    #[test]
    fn canonicalize_examples() {
        let c = word("[[2,1],3]").canonicalize();
        assert_eq!((c.word.to_string(), c.sign), ("[[1,2],3]".to_string(), -1));
        let c = word("[3,[1,2]]").canonicalize();
        assert_eq!((c.word.to_string(), c.sign), ("[[1,2],3]".to_string(), -1));
        let c = word("[[2,4,5],1,3]").canonicalize();
        assert_eq!((c.word.to_string(), c.sign), ("[1,[2,4,5],3]".to_string(), -1));
        let c = word("[1,[2,4,5],3]").canonicalize();
        assert_eq!(c.sign, 1);
        assert_eq!(c.word.to_string(), "[1,[2,4,5],3]");
    }

    #[test]
    fn rejects_bad_words() {
        assert_eq!(word_err("[[1,2],1]"), Error::RepeatedLeaf(1));
        assert!(matches!(word_err("[[1,2,3],4]"), Error::Invalid(_)));
        assert!(matches!(word_err("[1]"), Error::Invalid(_)));
        assert!(matches!(word_err("5"), Error::Invalid(_)));
        assert!(matches!(word_err("[0,1]"), Error::Invalid(_)));
        assert!(matches!(word_err("[1,2"), Error::Parse(_)));
        assert!(matches!(word_err("[1,2]]"), Error::Parse(_)));
        assert!(matches!(word_err("[1,99999999999]"), Error::Parse(_)));
        let deep = "[".repeat(1000);
        assert!(matches!(word_err(&deep), Error::Parse(_)));
    }

    fn word_err(s: &str) -> Error {
        s.parse::<BracketedWord>().unwrap_err()
    }

    #[test]
    fn act_examples() {
        let b = word("[[1,2],3]").canonicalize().word;
        let id = act(&Permutation::identity(3), &b).unwrap();
        assert_eq!((id.word.clone(), id.sign), (b.clone(), 1));
        let t12 = act(&Permutation::transposition(3, 1, 2).unwrap(), &b).unwrap();
        assert_eq!((t12.word.to_string(), t12.sign), ("[[1,2],3]".to_string(), -1));
        // [[3,2],1] = -[[2,3],1] = [1,[2,3]]
        let t13 = act(&Permutation::transposition(3, 1, 3).unwrap(), &b).unwrap();
        assert_eq!((t13.word.to_string(), t13.sign), ("[1,[2,3]]".to_string(), 1));
        assert!(act(&Permutation::identity(4), &b).is_err());
    }

    #[test]
    fn enumeration_sizes() {
        let e = enumerate_canonical(2, 3, DEFAULT_ENUMERATION_LIMIT).unwrap();
        let shown: Vec<String> = e.iter().map(|b| b.to_string()).collect();
        assert_eq!(shown, ["[[1,2],3]", "[[1,3],2]", "[1,[2,3]]"]);
        assert_eq!(enumerate_canonical(3, 3, DEFAULT_ENUMERATION_LIMIT).unwrap().len(), 10);
        assert_eq!(enumerate_canonical(2, 4, DEFAULT_ENUMERATION_LIMIT).unwrap().len(), 15);
        assert!(matches!(enumerate_canonical(2, 8, 100), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn counts_match_known_values() {
        // (2k-3)!! for binary brackets
        let double_fact = |k: usize| (1..=(2 * k - 3)).step_by(2).product::<usize>();
        for k in 2..=8 {
            assert_eq!(canonical_count(2, k).unwrap(), BigInt::from(double_fact(k)));
        }
        for n in 2..=6 {
            let m = 2 * n - 1;
            let binom = (0..n).fold(1usize, |acc, i| acc * (m - i) / (i + 1));
            assert_eq!(canonical_count(n, 3).unwrap(), BigInt::from(binom));
        }
    }

    #[test]
    fn display_round_trip() {
        for s in ["[[1,2,4],3,5]", "[1,[2,[3,4]]]", "[ [1 ,2], 3 ]"] {
            let b: Bracket = s.parse().unwrap();
            let again: Bracket = b.to_string().parse().unwrap();
            assert_eq!(again, b);
        }
    }

    #[test]
    fn paths_and_replacement() {
        let b: Bracket = "[[1,2],[3,4]]".parse().unwrap();
        assert_eq!(b.internal_paths(), vec![vec![], vec![0], vec![1]]);
        assert_eq!(b.at(&[1]).to_string(), "[3,4]");
        let r = b.replace(&[1], Bracket::Leaf(9));
        assert_eq!(r.to_string(), "[[1,2],9]");
    }
}
