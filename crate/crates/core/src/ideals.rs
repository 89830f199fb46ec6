//! Squarefree monomial ideals held in both the generator view and the
//! face-ideal (minimal prime) view, plus the sum poset and the graded pieces
//! of local cohomology it computes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{compress_bits, full_bits, mask_string, Graph};
use crate::simplicial::SimplicialComplex;

/// A squarefree monomial ideal in `n` variables. Generators and minimal
/// primes are both stored as masks; each set is an antichain and the two
/// are Alexander dual data of each other.
///
/// The unit ideal has generator `0` and no primes; the zero ideal has no
/// generators and the single prime `0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqfreeIdeal {
    n: usize,
    gens: Vec<u64>,
    primes: Vec<u64>,
}

impl fmt::Debug for SqfreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SqfreeIdeal({})", self)
    }
}

impl fmt::Display for SqfreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let primes: Vec<String> = self.primes.iter().map(|&p| mask_string(p, self.n)).collect();
        write!(f, "{}; {}", self.n, primes.join(", "))
    }
}

impl SqfreeIdeal {
    pub fn from_gens(n: usize, gens: impl IntoIterator<Item = u64>) -> Result<Self> {
        let gens = checked_masks(n, gens)?;
        let gens = minimal_antichain(gens);
        let primes = minimal_transversals(&gens);
        Ok(SqfreeIdeal { n, gens, primes })
    }

    pub fn from_primes(n: usize, primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let primes = checked_masks(n, primes)?;
        let primes = minimal_antichain(primes);
        let gens = minimal_transversals(&primes);
        Ok(SqfreeIdeal { n, gens, primes })
    }

    pub fn unit(n: usize) -> Self {
        SqfreeIdeal {
            n,
            gens: vec![0],
            primes: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators, sorted.
    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    /// Minimal primes as face-ideal masks, sorted.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// True for the empty-prime marker left by restricting away every
    /// component.
    pub fn is_unit(&self) -> bool {
        self.primes.is_empty()
    }

    /// Smallest prime size; `None` for the unit ideal.
    pub fn height(&self) -> Option<usize> {
        self.primes.iter().map(|p| p.count_ones() as usize).min()
    }

    /// Whether the squarefree monomial `x^mask` lies in the ideal.
    pub fn contains_monomial(&self, mask: u64) -> bool {
        self.gens.iter().any(|&g| g & !mask == 0)
    }

    /// Re-reads the ideal with `extra` additional unused variables.
    pub fn extend(&self, extra: usize) -> Self {
        SqfreeIdeal {
            n: self.n + extra,
            gens: self.gens.clone(),
            primes: self.primes.clone(),
        }
    }
}

fn checked_masks(n: usize, masks: impl IntoIterator<Item = u64>) -> Result<Vec<u64>> {
    let full = full_bits(n);
    masks
        .into_iter()
        .map(|m| {
            if m & !full != 0 {
                Err(Error::MaskOutOfRange { mask: m, n })
            } else {
                Ok(m)
            }
        })
        .collect()
}

/// Removes duplicates and non-minimal masks, returning them sorted.
pub fn minimal_antichain(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !out.iter().any(|&k| k & !m == 0) {
            out.push(m);
        }
    }
    out.sort_unstable();
    out
}

/// Minimal sets meeting every member of `family` (Berge's algorithm).
fn minimal_transversals(family: &[u64]) -> Vec<u64> {
    let mut current = vec![0u64];
    for &edge in family {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t & edge != 0 {
                next.push(t);
            } else {
                let mut e = edge;
                while e != 0 {
                    let bit = e & e.wrapping_neg();
                    next.push(t | bit);
                    e &= e - 1;
                }
            }
        }
        current = minimal_antichain(next);
    }
    current
}

/// `J(G)`: one prime `(x_i, x_j)` per edge.
pub fn cover_ideal(g: &Graph) -> Result<SqfreeIdeal> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let masks = g.edges().into_iter().map(|(u, v)| 1u64 << u | 1u64 << v);
    SqfreeIdeal::from_primes(g.n(), masks)
}

/// `I(G)`: one generator `x_i x_j` per edge.
pub fn edge_ideal(g: &Graph) -> Result<SqfreeIdeal> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let masks = g.edges().into_iter().map(|(u, v)| 1u64 << u | 1u64 << v);
    SqfreeIdeal::from_gens(g.n(), masks)
}

/// Swaps the two views.
pub fn alexander_dual(j: &SqfreeIdeal) -> SqfreeIdeal {
    SqfreeIdeal {
        n: j.n,
        gens: j.primes.clone(),
        primes: j.gens.clone(),
    }
}

/// Localization at `p_α`, read in the `|α|` variables of `α`: the primes
/// contained in `α`, compressed. No surviving prime gives the unit ideal.
pub fn restrict(j: &SqfreeIdeal, alpha: u64) -> Result<SqfreeIdeal> {
    if alpha == 0 {
        return Err(Error::MaskOutOfRange { mask: 0, n: j.n });
    }
    if alpha & !full_bits(j.n) != 0 {
        return Err(Error::MaskOutOfRange { mask: alpha, n: j.n });
    }
    let m = alpha.count_ones() as usize;
    let kept: Vec<u64> = j
        .primes
        .iter()
        .filter(|&&p| p & !alpha == 0)
        .map(|&p| compress_bits(p, alpha))
        .collect();
    if kept.is_empty() {
        return Ok(SqfreeIdeal::unit(m));
    }
    SqfreeIdeal::from_primes(m, kept)
}

/// `A + B`: pairwise unions of primes, minimalized.
pub fn ideal_sum(a: &SqfreeIdeal, b: &SqfreeIdeal) -> Result<SqfreeIdeal> {
    if a.n != b.n {
        return Err(Error::AmbientMismatch(a.n, b.n));
    }
    if a.is_unit() || b.is_unit() {
        return Ok(SqfreeIdeal::unit(a.n));
    }
    let unions = a
        .primes
        .iter()
        .flat_map(|&p| b.primes.iter().map(move |&q| p | q))
        .collect::<Vec<_>>();
    SqfreeIdeal::from_primes(a.n, unions)
}

/// `A ∩ B`: union of the prime sets, minimalized.
pub fn ideal_intersection(a: &SqfreeIdeal, b: &SqfreeIdeal) -> Result<SqfreeIdeal> {
    if a.n != b.n {
        return Err(Error::AmbientMismatch(a.n, b.n));
    }
    let primes: Vec<u64> = a.primes.iter().chain(&b.primes).copied().collect();
    if primes.is_empty() {
        return Ok(SqfreeIdeal::unit(a.n));
    }
    SqfreeIdeal::from_primes(a.n, primes)
}

/// `P_J`: all unions of nonempty sets of primes. Ordered by reverse
/// inclusion of ideals, so `z` lies above `α` exactly when
/// `mask(z) ⊊ mask(α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumPoset {
    n: usize,
    elements: BTreeSet<u64>,
}

impl SumPoset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &BTreeSet<u64> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, alpha: u64) -> bool {
        self.elements.contains(&alpha)
    }

    /// Order complex of the open interval `(α, 1̂)`: chains of poset masks
    /// strictly inside `α`. The empty interval gives `{∅}`.
    pub fn interval_complex(&self, alpha: u64) -> SimplicialComplex {
        let below: Vec<u64> = self
            .elements
            .iter()
            .copied()
            .filter(|&z| z != alpha && z & !alpha == 0)
            .collect();
        if below.is_empty() {
            return SimplicialComplex::empty_face();
        }
        // maximal chains by depth-first extension in increasing mask order
        let mut chains: Vec<Vec<u32>> = Vec::new();
        let mut stack: Vec<u32> = Vec::new();
        fn extend(below: &[u64], stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            let mut extended = false;
            let last = stack.last().map(|&i| below[i as usize]);
            for (i, &z) in below.iter().enumerate() {
                let ok = match last {
                    None => true,
                    Some(l) => l != z && l & !z == 0,
                };
                if ok {
                    extended = true;
                    stack.push(i as u32);
                    extend(below, stack, out);
                    stack.pop();
                }
            }
            if !extended {
                out.push(stack.clone());
            }
        }
        extend(&below, &mut stack, &mut chains);
        SimplicialComplex::from_facets(chains)
    }
}

pub fn sum_poset(j: &SqfreeIdeal) -> SumPoset {
    let mut elements: BTreeSet<u64> = j.primes.iter().copied().collect();
    let mut frontier: Vec<u64> = elements.iter().copied().collect();
    while let Some(z) = frontier.pop() {
        for &p in &j.primes {
            let u = z | p;
            if elements.insert(u) {
                frontier.push(u);
            }
        }
    }
    SumPoset { n: j.n, elements }
}

/// `m_{r,α}(J)`: zero off the sum poset, otherwise
/// `dim H̃_{|α|-r-1}` of the open interval `(α, 1̂)`.
pub fn m_coeff<F: Field>(j: &SqfreeIdeal, r: i64, alpha: u64) -> Result<usize> {
    if r < 0 {
        return Err(Error::NegativeIndex(r));
    }
    let poset = sum_poset(j);
    Ok(m_coeff_in::<F>(&poset, r, alpha))
}

fn m_coeff_in<F: Field>(poset: &SumPoset, r: i64, alpha: u64) -> usize {
    if !poset.contains(alpha) {
        return 0;
    }
    let q = alpha.count_ones() as i64 - r - 1;
    poset.interval_complex(alpha).reduced_homology_at::<F>(q)
}

/// `dim [H^r_J(R)]_{-α}`, read off the sum poset.
pub fn graded_piece_dim<F: Field>(j: &SqfreeIdeal, r: i64, alpha: u64) -> Result<usize> {
    m_coeff::<F>(j, r, alpha)
}

/// Every nonzero `m_{r,α}(J)`, keyed by `(r, α)`.
pub fn graded_pieces<F: Field>(j: &SqfreeIdeal) -> BTreeMap<(usize, u64), usize> {
    let poset = sum_poset(j);
    let mut out = BTreeMap::new();
    for &alpha in poset.elements() {
        let h = poset.interval_complex(alpha).reduced_homology::<F>();
        let w = alpha.count_ones() as i64;
        for (k, &dim) in h.iter().enumerate() {
            // H̃_q with q = k - 1 = |α| - r - 1
            let r = w - k as i64;
            if dim > 0 && r >= 0 {
                out.insert((r as usize, alpha), dim);
            }
        }
    }
    out
}

/// How a decomposition `J = L ∩ K` was certified to be a Mayer–Vietoris
/// splitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MvVerdict {
    ByPosets,
    ByGradedPieces,
    Unknown,
}

pub fn check_mv_splitting<F: Field>(l: &SqfreeIdeal, k: &SqfreeIdeal) -> Result<MvVerdict> {
    let lk = ideal_sum(l, k)?;
    let (pl, pk, plk) = (sum_poset(l), sum_poset(k), sum_poset(&lk));
    let disjoint = |a: &SumPoset, b: &SumPoset| a.elements.is_disjoint(&b.elements);
    if disjoint(&pl, &pk) && disjoint(&pl, &plk) && disjoint(&pk, &plk) {
        return Ok(MvVerdict::ByPosets);
    }
    let gl = graded_pieces::<F>(l);
    let gk = graded_pieces::<F>(k);
    let glk = graded_pieces::<F>(&lk);
    if glk
        .keys()
        .all(|key| !gl.contains_key(key) && !gk.contains_key(key))
    {
        return Ok(MvVerdict::ByGradedPieces);
    }
    Ok(MvVerdict::Unknown)
}

/// Parses `"n; 110, 011"` (primes) or `"gens: n; 110, 011"`.
pub fn parse_ideal(s: &str) -> Result<SqfreeIdeal> {
    let s = s.trim();
    let (is_gens, rest) = match s.strip_prefix("gens:") {
        Some(r) => (true, r),
        None => (false, s),
    };
    let (n_part, masks_part) = rest
        .split_once(';')
        .ok_or_else(|| Error::IdealLiteral(format!("missing ';' in {s:?}")))?;
    let n: usize = n_part
        .trim()
        .parse()
        .map_err(|_| Error::IdealLiteral(format!("bad variable count {:?}", n_part.trim())))?;
    if n == 0 || n > 64 {
        return Err(Error::IdealLiteral(format!("variable count {n} out of range")));
    }
    let mut masks = Vec::new();
    for tok in masks_part.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        if tok.len() != n || !tok.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::IdealLiteral(format!("bad mask {tok:?} for {n} variables")));
        }
        let bits = tok
            .chars()
            .enumerate()
            .filter(|&(_, c)| c == '1')
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        masks.push(bits);
    }
    if masks.is_empty() {
        return Err(Error::IdealLiteral("no masks".into()));
    }
    if is_gens {
        SqfreeIdeal::from_gens(n, masks)
    } else {
        SqfreeIdeal::from_primes(n, masks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use proptest::prelude::*;

    type F = Fp<32003>;

    fn m(s: &str) -> u64 {
        crate::graphs::VertexMask::parse(s).unwrap().bits()
    }

    #[test]
    fn cover_and_edge_ideals() {
        let e = Graph::path(2).unwrap();
        assert_eq!(cover_ideal(&e).unwrap().primes(), &[m("11")]);
        assert_eq!(edge_ideal(&e).unwrap().gens(), &[m("11")]);
        let p3 = Graph::path(3).unwrap();
        let j = cover_ideal(&p3).unwrap();
        assert_eq!(j.primes(), &[m("110"), m("011")]);
        // J(P_3) = (x2, x1x3)
        assert_eq!(j.gens(), &[m("010"), m("101")]);
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(cover_ideal(&c3).unwrap().primes().len(), 3);
        assert!(cover_ideal(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn duality() {
        for g in [Graph::cycle(5).unwrap(), Graph::wheel(6).unwrap(), Graph::path(4).unwrap()] {
            let j = cover_ideal(&g).unwrap();
            assert_eq!(alexander_dual(&j), edge_ideal(&g).unwrap());
            assert_eq!(alexander_dual(&alexander_dual(&j)), j);
        }
        let x1 = SqfreeIdeal::from_gens(3, [m("100")]).unwrap();
        assert_eq!(alexander_dual(&x1), x1);
        let top = SqfreeIdeal::from_gens(3, [m("111")]).unwrap();
        let d = alexander_dual(&top);
        assert_eq!(d.gens(), &[m("100"), m("010"), m("001")]);
        assert_eq!(d.primes(), &[m("111")]);
    }

    #[test]
    fn restriction() {
        let j = cover_ideal(&Graph::path(5).unwrap()).unwrap();
        let r = restrict(&j, m("11011")).unwrap();
        let two_edges = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(r, cover_ideal(&two_edges).unwrap());
        assert_eq!(restrict(&j, full_bits(5)).unwrap(), j);
        let c3 = cover_ideal(&Graph::cycle(3).unwrap()).unwrap();
        let r = restrict(&c3, m("110")).unwrap();
        assert_eq!(r.primes(), &[m("11")]);
        assert!(restrict(&c3, m("100")).unwrap().is_unit());
    }

    #[test]
    fn sums_and_intersections() {
        let a = SqfreeIdeal::from_primes(3, [m("110")]).unwrap();
        let b = SqfreeIdeal::from_primes(3, [m("011")]).unwrap();
        assert_eq!(ideal_sum(&a, &b).unwrap().primes(), &[m("111")]);
        assert_eq!(
            ideal_intersection(&a, &b).unwrap(),
            cover_ideal(&Graph::path(3).unwrap()).unwrap()
        );
        let c = SqfreeIdeal::from_primes(4, [m("1000")]).unwrap();
        assert!(ideal_sum(&a, &c).is_err());
    }

    #[test]
    fn sum_of_c4_split_agrees_with_membership() {
        // C_4 at x4: L = J(P_3 on x1 x2 x3), K = (x1,x4) ∩ (x3,x4)
        let l = SqfreeIdeal::from_primes(4, [m("1100"), m("0110")]).unwrap();
        let k = SqfreeIdeal::from_primes(4, [m("1001"), m("0011")]).unwrap();
        let s = ideal_sum(&l, &k).unwrap();
        for mono in 0u64..16 {
            let member = l.contains_monomial(mono) || k.contains_monomial(mono);
            assert_eq!(s.contains_monomial(mono), member, "{mono:04b}");
        }
        assert_eq!(s.height(), Some(3));
    }

    #[test]
    fn sum_posets() {
        let e = cover_ideal(&Graph::path(2).unwrap()).unwrap();
        assert_eq!(sum_poset(&e).elements().iter().copied().collect::<Vec<_>>(), vec![m("11")]);
        let p3 = cover_ideal(&Graph::path(3).unwrap()).unwrap();
        let p: BTreeSet<u64> = [m("110"), m("011"), m("111")].into_iter().collect();
        assert_eq!(sum_poset(&p3).elements(), &p);
        let c3 = cover_ideal(&Graph::cycle(3).unwrap()).unwrap();
        assert_eq!(sum_poset(&c3).len(), 4);
    }

    #[test]
    fn graded_piece_examples() {
        let p3 = cover_ideal(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(m_coeff::<F>(&p3, 2, m("110")).unwrap(), 1);
        assert_eq!(m_coeff::<F>(&p3, 2, m("111")).unwrap(), 1);
        assert_eq!(m_coeff::<F>(&p3, 3, m("111")).unwrap(), 0);
        assert_eq!(m_coeff::<F>(&p3, 2, m("100")).unwrap(), 0);
        let c3 = cover_ideal(&Graph::cycle(3).unwrap()).unwrap();
        assert_eq!(m_coeff::<F>(&c3, 2, m("111")).unwrap(), 2);
        assert_eq!(graded_piece_dim::<F>(&c3, 2, m("111")).unwrap(), 2);
        assert!(m_coeff::<F>(&c3, -1, m("111")).is_err());
        let all = graded_pieces::<F>(&c3);
        assert_eq!(all.get(&(2, m("111"))), Some(&2));
        assert_eq!(all.get(&(2, m("110"))), Some(&1));
    }

    #[test]
    fn mv_verdicts() {
        let l = SqfreeIdeal::from_primes(3, [m("110")]).unwrap();
        let k = SqfreeIdeal::from_primes(3, [m("011")]).unwrap();
        assert_eq!(check_mv_splitting::<F>(&l, &k).unwrap(), MvVerdict::ByPosets);
        let l4 = SqfreeIdeal::from_primes(4, [m("1100"), m("0110")]).unwrap();
        let k4 = SqfreeIdeal::from_primes(4, [m("1001"), m("0011")]).unwrap();
        assert_eq!(check_mv_splitting::<F>(&l4, &k4).unwrap(), MvVerdict::ByPosets);
        assert_eq!(check_mv_splitting::<F>(&l4, &l4).unwrap(), MvVerdict::Unknown);
    }

    #[test]
    fn literals() {
        let j = parse_ideal("3; 110, 011").unwrap();
        assert_eq!(j, cover_ideal(&Graph::path(3).unwrap()).unwrap());
        let i = parse_ideal("gens: 3; 110, 011").unwrap();
        assert_eq!(i, edge_ideal(&Graph::path(3).unwrap()).unwrap());
        assert_eq!(j.to_string(), "3; 110, 011");
        assert!(parse_ideal("3 110").is_err());
        assert!(parse_ideal("3; 11").is_err());
        assert!(parse_ideal("x; 110").is_err());
        assert!(parse_ideal("3;").is_err());
    }

    fn arb_ideal() -> impl Strategy<Value = SqfreeIdeal> {
        (1usize..7).prop_flat_map(|n| {
            prop::collection::vec(1u64..(1 << n), 1..6)
                .prop_map(move |ms| SqfreeIdeal::from_primes(n, ms).unwrap())
        })
    }

    proptest! {
        #[test]
        fn dual_is_an_involution(j in arb_ideal()) {
            prop_assert_eq!(alexander_dual(&alexander_dual(&j)), j.clone());
            let again = SqfreeIdeal::from_gens(j.n(), j.gens().iter().copied()).unwrap();
            prop_assert_eq!(again, j);
        }

        #[test]
        fn primes_describe_membership(j in arb_ideal()) {
            for mono in 0u64..(1 << j.n()) {
                let by_primes = j.primes().iter().all(|&p| p & mono != 0);
                prop_assert_eq!(j.contains_monomial(mono), by_primes);
            }
        }

        #[test]
        fn sum_and_intersection_by_membership(a in arb_ideal(), bits in prop::collection::vec(1u64..64, 1..5)) {
            let n = a.n();
            let b = SqfreeIdeal::from_primes(n, bits.iter().map(|&x| x & full_bits(n)).filter(|&x| x != 0).chain([1])).unwrap();
            let s = ideal_sum(&a, &b).unwrap();
            let i = ideal_intersection(&a, &b).unwrap();
            for mono in 0u64..(1 << n) {
                prop_assert_eq!(s.contains_monomial(mono), a.contains_monomial(mono) || b.contains_monomial(mono));
                prop_assert_eq!(i.contains_monomial(mono), a.contains_monomial(mono) && b.contains_monomial(mono));
            }
        }

        #[test]
        fn poset_bounds(j in arb_ideal()) {
            let p = sum_poset(&j);
            prop_assert!(p.len() < 1usize << j.primes().len());
            for &q in j.primes() {
                prop_assert!(p.contains(q));
            }
        }

        #[test]
        fn restriction_commutes_with_minimalization(j in arb_ideal(), alpha in 1u64..64) {
            let alpha = alpha & full_bits(j.n());
            prop_assume!(alpha != 0);
            // restricting the non-minimal list of all primes and of the
            // minimal ones gives the same ideal
            let padded: Vec<u64> = j.primes().iter().flat_map(|&p| [p, p | alpha]).collect();
            let k = SqfreeIdeal::from_primes(j.n(), padded).unwrap();
            prop_assert_eq!(restrict(&k, alpha).unwrap(), restrict(&j, alpha).unwrap());
        }
    }
}
