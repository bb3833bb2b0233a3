use crate::error::{Error, Result};
use crate::magma::{FiniteMagma, Witness};
use crate::subset::SubsetMask;

/// Default order cap for whole-powerset substructure enumeration. The
/// closure-system walk visits only closed subsets, but a pathological magma
/// (e.g. a left-projection table, where every subset is closed) still costs
/// 2^n, so the cap keeps the default API safe.
pub const DEFAULT_ENUMERATION_BOUND: usize = 24;

/// The family of closed subsets found by an enumeration, together with how
/// the search was bounded.
#[derive(Debug, Clone)]
pub struct ClosedSetFamily {
    pub members: Vec<SubsetMask>,
    /// True when the family is provably the complete closure system.
    pub complete: bool,
    /// True when a member cap stopped the walk early.
    pub bound_hit: bool,
}

pub(crate) fn subset_in_range(m: &FiniteMagma, subset: &SubsetMask) -> Result<()> {
    if subset.width() != m.order() {
        return Err(Error::SubsetOutOfRange {
            width: subset.width(),
            order: m.order(),
        });
    }
    Ok(())
}

/// Smallest closed subset containing `seed`.
pub fn generated_closure(m: &FiniteMagma, seed: &SubsetMask) -> Result<SubsetMask> {
    subset_in_range(m, seed)?;
    let mut closure = seed.clone();
    loop {
        let elems = closure.to_vec();
        let mut grew = false;
        for &a in &elems {
            for &b in &elems {
                let p = m.at(a, b);
                if !closure.contains(p) {
                    closure.insert(p);
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(closure);
        }
    }
}

/// True when `subset` is closed under the operation.
pub fn is_closed_subset(m: &FiniteMagma, subset: &SubsetMask) -> Result<bool> {
    subset_in_range(m, subset)?;
    let elems = subset.to_vec();
    Ok(elems
        .iter()
        .all(|&a| elems.iter().all(|&b| subset.contains(m.at(a, b)))))
}

/// Enumerates every closed subset (including the empty set and the full
/// carrier) in lectic order via the closure-system walk.
pub fn enumerate_closed(m: &FiniteMagma) -> Result<ClosedSetFamily> {
    enumerate_closed_bounded(m, DEFAULT_ENUMERATION_BOUND, usize::MAX)
}

/// As `enumerate_closed`, with an explicit order bound and a cap on how many
/// members to emit before giving up on completeness.
pub fn enumerate_closed_bounded(
    m: &FiniteMagma,
    order_bound: usize,
    max_members: usize,
) -> Result<ClosedSetFamily> {
    if m.order() > order_bound {
        return Err(Error::OrderTooLarge {
            order: m.order(),
            bound: order_bound,
            operation: "closed-subset enumeration",
        });
    }
    let mut members = Vec::new();
    let mut bound_hit = false;
    let close = |s: &SubsetMask| generated_closure(m, s).expect("width matches");
    for subset in ClosureIter::new(m.order(), close) {
        if members.len() >= max_members {
            bound_hit = true;
            break;
        }
        members.push(subset);
    }
    Ok(ClosedSetFamily {
        complete: !bound_hit,
        members,
        bound_hit,
    })
}

/// Iterator adapter over the lectic closure walk.
struct ClosureIter<F: FnMut(&SubsetMask) -> SubsetMask> {
    width: usize,
    close: F,
    next: Option<SubsetMask>,
}

impl<F: FnMut(&SubsetMask) -> SubsetMask> ClosureIter<F> {
    fn new(width: usize, mut close: F) -> Self {
        let first = close(&SubsetMask::empty(width));
        ClosureIter {
            width,
            close,
            next: Some(first),
        }
    }
}

impl<F: FnMut(&SubsetMask) -> SubsetMask> Iterator for ClosureIter<F> {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let current = self.next.take()?;
        self.next = crate::subset::next_closure(&current, self.width, &mut self.close);
        Some(current)
    }
}

/// True when the operation restricted to `subset` is associative; `subset`
/// must be closed.
pub fn is_subset_associative(m: &FiniteMagma, subset: &SubsetMask) -> Result<bool> {
    if !is_closed_subset(m, subset)? {
        return Err(Error::NotClosed {
            subset: subset.to_string(),
            reason: "associativity is only defined on closed subsets".into(),
        });
    }
    let elems = subset.to_vec();
    Ok(elems.iter().all(|&a| {
        elems.iter().all(|&b| {
            elems
                .iter()
                .all(|&c| m.at(m.at(a, b), c) == m.at(a, m.at(b, c)))
        })
    }))
}

/// True when the operation restricted to `subset` is commutative; `subset`
/// need not be closed (products are compared in the ambient magma).
pub fn is_subset_commutative(m: &FiniteMagma, subset: &SubsetMask) -> Result<bool> {
    subset_in_range(m, subset)?;
    let elems = subset.to_vec();
    Ok(elems
        .iter()
        .all(|&a| elems.iter().all(|&b| m.at(a, b) == m.at(b, a))))
}

/// All nonempty closed subsets of at least `min_size` elements whose
/// restricted operation is associative. With `exclude_trivial_zero` set,
/// the singleton of the designated zero is filtered out.
pub fn enumerate_subsemigroups(
    m: &FiniteMagma,
    min_size: usize,
    exclude_trivial_zero: bool,
) -> Result<ClosedSetFamily> {
    let family = enumerate_closed(m)?;
    let mut members = Vec::new();
    for s in family.members {
        if s.is_empty() || s.len() < min_size {
            continue;
        }
        if exclude_trivial_zero && is_trivial_subset(m, &s) {
            continue;
        }
        if is_subset_associative(m, &s)? {
            members.push(s);
        }
    }
    Ok(ClosedSetFamily {
        members,
        complete: family.complete,
        bound_hit: family.bound_hit,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealSide {
    Left,
    Right,
    TwoSided,
}

/// How an ideal candidate escaped: multiplying `member` by `outside` on the
/// failing side produced `product` outside the subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscapeWitness {
    pub outside: usize,
    pub member: usize,
    pub product: usize,
    pub side: IdealSide,
}

/// Checks the absorption property `x*a ∈ P` (left) / `a*x ∈ P` (right) for
/// all `x` in the magma and `a` in the subset. The subset must be a
/// nonempty closed subgroupoid; the first escape in scan order is reported.
pub fn ideal_report(
    m: &FiniteMagma,
    subset: &SubsetMask,
    side: IdealSide,
) -> Result<(bool, Option<EscapeWitness>)> {
    if subset.is_empty() {
        return Err(Error::NotClosed {
            subset: subset.to_string(),
            reason: "ideals must be nonempty".into(),
        });
    }
    if !is_closed_subset(m, subset)? {
        return Err(Error::NotClosed {
            subset: subset.to_string(),
            reason: "ideals must be closed subgroupoids".into(),
        });
    }
    let elems = subset.to_vec();
    let check_left = side != IdealSide::Right;
    let check_right = side != IdealSide::Left;
    for x in m.elements() {
        for &a in &elems {
            if check_left {
                let p = m.at(x, a);
                if !subset.contains(p) {
                    return Ok((
                        false,
                        Some(EscapeWitness {
                            outside: x,
                            member: a,
                            product: p,
                            side: IdealSide::Left,
                        }),
                    ));
                }
            }
            if check_right {
                let p = m.at(a, x);
                if !subset.contains(p) {
                    return Ok((
                        false,
                        Some(EscapeWitness {
                            outside: x,
                            member: a,
                            product: p,
                            side: IdealSide::Right,
                        }),
                    ));
                }
            }
        }
    }
    Ok((true, None))
}

pub fn is_ideal(m: &FiniteMagma, subset: &SubsetMask, side: IdealSide) -> Result<bool> {
    Ok(ideal_report(m, subset, side)?.0)
}

/// All nonempty proper closed subsets absorbing on the given side.
pub fn enumerate_ideals(m: &FiniteMagma, side: IdealSide) -> Result<Vec<SubsetMask>> {
    let family = enumerate_closed(m)?;
    let mut out = Vec::new();
    for s in family.members {
        if !s.is_empty() && !s.is_full() && ideal_report(m, &s, side)?.0 {
            out.push(s);
        }
    }
    Ok(out)
}

/// Quantifier scope for the normality conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalityScope {
    /// x, y, a range over V itself (the definition as printed).
    LiteralV,
    /// x, y, a range over the whole magma.
    OverG,
}

/// Which of the three normality conditions failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalityDefect {
    /// aV != Va for this a.
    Commute { a: usize },
    /// (Vx)y != V(xy) for this pair.
    AssocRight { x: usize, y: usize },
    /// y(xV) != (yx)V for this pair.
    AssocLeft { x: usize, y: usize },
}

pub(crate) fn setwise_left(m: &FiniteMagma, a: usize, v: &SubsetMask) -> SubsetMask {
    let mut out = SubsetMask::empty(m.order());
    for b in v.iter() {
        out.insert(m.at(a, b));
    }
    out
}

pub(crate) fn setwise_right(m: &FiniteMagma, v: &SubsetMask, a: usize) -> SubsetMask {
    let mut out = SubsetMask::empty(m.order());
    for b in v.iter() {
        out.insert(m.at(b, a));
    }
    out
}

/// Checks the setwise conditions aV = Va, (Vx)y = V(xy), y(xV) = (yx)V for a
/// closed subgroupoid V, with the bound variables ranging per `scope`.
pub fn normal_subgroupoid_report(
    m: &FiniteMagma,
    v: &SubsetMask,
    scope: NormalityScope,
) -> Result<(bool, Option<NormalityDefect>)> {
    if v.is_empty() {
        return Err(Error::NotClosed {
            subset: v.to_string(),
            reason: "normality is defined for nonempty subgroupoids".into(),
        });
    }
    if !is_closed_subset(m, v)? {
        return Err(Error::NotClosed {
            subset: v.to_string(),
            reason: "normality is defined for closed subgroupoids".into(),
        });
    }
    let range: Vec<usize> = match scope {
        NormalityScope::LiteralV => v.to_vec(),
        NormalityScope::OverG => m.elements().collect(),
    };
    for &a in &range {
        if setwise_left(m, a, v) != setwise_right(m, v, a) {
            return Ok((false, Some(NormalityDefect::Commute { a })));
        }
    }
    for &x in &range {
        let vx = setwise_right(m, v, x);
        for &y in &range {
            let lhs = setwise_right(m, &vx, y);
            let rhs = setwise_right(m, v, m.at(x, y));
            if lhs != rhs {
                return Ok((false, Some(NormalityDefect::AssocRight { x, y })));
            }
        }
    }
    for &x in &range {
        let xv = setwise_left(m, x, v);
        for &y in &range {
            let lhs = setwise_left(m, y, &xv);
            let rhs = setwise_left(m, m.at(y, x), v);
            if lhs != rhs {
                return Ok((false, Some(NormalityDefect::AssocLeft { x, y })));
            }
        }
    }
    Ok((true, None))
}

pub fn is_normal_subgroupoid(
    m: &FiniteMagma,
    v: &SubsetMask,
    scope: NormalityScope,
) -> Result<bool> {
    Ok(normal_subgroupoid_report(m, v, scope)?.0)
}

/// A normal groupoid has no normal subgroupoid other than trivial ones: the
/// whole carrier and, when a designated zero exists, {zero}.
pub fn is_normal_groupoid(m: &FiniteMagma, scope: NormalityScope) -> Result<bool> {
    let family = enumerate_closed(m)?;
    for s in &family.members {
        if s.is_empty() || s.is_full() {
            continue;
        }
        if is_trivial_subset(m, s) {
            continue;
        }
        if normal_subgroupoid_report(m, s, scope)?.0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The only subset dismissed as trivial is {designated_zero}.
pub fn is_trivial_subset(m: &FiniteMagma, subset: &SubsetMask) -> bool {
    match m.designated_zero() {
        Some(z) => subset.len() == 1 && subset.contains(z),
        None => false,
    }
}

/// A groupoid is simple when it has no proper nontrivial closed subset.
pub fn is_simple(m: &FiniteMagma) -> Result<bool> {
    let family = enumerate_closed(m)?;
    Ok(family
        .members
        .iter()
        .all(|s| s.is_empty() || s.is_full() || is_trivial_subset(m, s)))
}

/// Where the translating element of a conjugacy question may come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplierScope {
    /// x drawn from the first subgroupoid (the definition as printed).
    InFirst,
    /// x drawn from the whole magma.
    InG,
}

/// H and K are conjugate subgroupoids when they are disjoint and some x
/// (drawn per `scope`) reproduces H as xK or Kx. Both must be nonempty and
/// closed. Returns the first working multiplier as (x, used_left_form).
pub fn conjugate_subgroupoids_report(
    m: &FiniteMagma,
    h: &SubsetMask,
    k: &SubsetMask,
    scope: MultiplierScope,
) -> Result<Option<(usize, bool)>> {
    for s in [h, k] {
        if s.is_empty() || !is_closed_subset(m, s)? {
            return Err(Error::NotClosed {
                subset: s.to_string(),
                reason: "conjugacy is defined for nonempty closed subgroupoids".into(),
            });
        }
    }
    if !h.is_disjoint(k) {
        return Err(Error::NotDisjoint {
            left: h.to_string(),
            right: k.to_string(),
        });
    }
    let xs: Vec<usize> = match scope {
        MultiplierScope::InFirst => h.to_vec(),
        MultiplierScope::InG => m.elements().collect(),
    };
    for &x in &xs {
        if &setwise_left(m, x, k) == h {
            return Ok(Some((x, true)));
        }
        if &setwise_right(m, k, x) == h {
            return Ok(Some((x, false)));
        }
    }
    Ok(None)
}

pub fn are_conjugate_subgroupoids(
    m: &FiniteMagma,
    h: &SubsetMask,
    k: &SubsetMask,
    scope: MultiplierScope,
) -> Result<bool> {
    Ok(conjugate_subgroupoids_report(m, h, k, scope)?.is_some())
}

/// Inner commutative: every semigroup sitting inside the groupoid is
/// commutative. Associative closed subsets are exactly the semigroups the
/// operation induces, and the scan includes improper ones (the whole
/// carrier, when it happens to be associative).
pub fn is_inner_commutative(m: &FiniteMagma) -> Result<(bool, Option<SubsetMask>)> {
    let family = enumerate_closed(m)?;
    for s in &family.members {
        if s.is_empty() {
            continue;
        }
        if is_subset_associative(m, s)? && !is_subset_commutative(m, s)? {
            return Ok((false, Some(s.clone())));
        }
    }
    Ok((true, None))
}

/// The magma the operation induces on a closed subset, with elements
/// renumbered ascending. Returns the submagma and the map from new indices
/// back to parent elements. Labels and a designated zero inside the subset
/// are carried over.
pub fn induced_submagma(m: &FiniteMagma, subset: &SubsetMask) -> Result<(FiniteMagma, Vec<usize>)> {
    if subset.is_empty() || !is_closed_subset(m, subset)? {
        return Err(Error::NotClosed {
            subset: subset.to_string(),
            reason: "induced operation needs a nonempty closed subset".into(),
        });
    }
    let elems = subset.to_vec();
    let mut index_of = vec![usize::MAX; m.order()];
    for (i, &e) in elems.iter().enumerate() {
        index_of[e] = i;
    }
    let k = elems.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &elems {
        for &b in &elems {
            table.push(index_of[m.at(a, b)]);
        }
    }
    let labels = elems.iter().map(|&e| m.label_of(e)).collect();
    let zero = m
        .designated_zero()
        .filter(|&z| subset.contains(z))
        .map(|z| index_of[z]);
    let sub = FiniteMagma::build_table(k, table, Some(labels))?.with_designated_zero(zero)?;
    Ok((sub, elems))
}

/// Lexicographically first witness that the subset fails associativity, if
/// any. Used to replay subset-restricted checks.
pub fn subset_associativity_witness(
    m: &FiniteMagma,
    subset: &SubsetMask,
) -> Result<Option<Witness>> {
    subset_in_range(m, subset)?;
    let elems = subset.to_vec();
    for &a in &elems {
        for &b in &elems {
            for &c in &elems {
                let lhs = m.at(m.at(a, b), c);
                let rhs = m.at(a, m.at(b, c));
                if lhs != rhs {
                    return Ok(Some(Witness::triple(a, b, c, lhs, rhs)));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zn::{build_zn, ZnSpec};

    fn zn(n: usize, t: usize, u: usize) -> FiniteMagma {
        build_zn(&ZnSpec::new(n, t, u, false).unwrap())
    }

    fn mask(width: usize, elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elems(width, elems.iter().copied())
    }

    #[test]
    fn closure_of_seed() {
        let m = zn(6, 3, 0); // a*b = 3a
        let c = generated_closure(&m, &mask(6, &[1])).unwrap();
        assert_eq!(c.to_vec(), vec![1, 3]);
        let c = generated_closure(&m, &mask(6, &[2])).unwrap();
        assert_eq!(c.to_vec(), vec![0, 2]);
        assert!(is_closed_subset(&m, &c).unwrap());
    }

    #[test]
    fn closed_enumeration_matches_brute_force() {
        for (n, t, u) in [(4, 2, 3), (6, 4, 5), (6, 3, 3), (5, 1, 2), (6, 2, 4)] {
            let m = zn(n, t, u);
            let family = enumerate_closed(&m).unwrap();
            assert!(family.complete);
            let mut brute = Vec::new();
            for bits in 0..(1u32 << n) {
                let s = SubsetMask::from_elems(n, (0..n).filter(|&i| bits >> i & 1 == 1));
                if is_closed_subset(&m, &s).unwrap() {
                    brute.push(s);
                }
            }
            let mut walked = family.members.clone();
            walked.sort();
            brute.sort();
            assert_eq!(walked, brute, "Z_{n}({t},{u})");
        }
    }

    #[test]
    fn enumeration_respects_bounds() {
        let m = zn(6, 4, 5);
        let err = enumerate_closed_bounded(&m, 5, usize::MAX).unwrap_err();
        assert_eq!(err.code(), "ORDER_TOO_LARGE");
        let family = enumerate_closed_bounded(&m, 24, 2).unwrap();
        assert_eq!(family.members.len(), 2);
        assert!(family.bound_hit);
        assert!(!family.complete);
    }

    #[test]
    fn subsemigroups_of_z6_1_3() {
        // {0,3} is closed (0*0=0, 0*3=9≡3, 3*0=3, 3*3=12≡0) and its induced
        // table is the two-element group, hence associative. {3} alone is
        // not closed because 3*3 = 0.
        let m = zn(6, 1, 3);
        let subs = enumerate_subsemigroups(&m, 1, false).unwrap();
        assert!(subs.members.contains(&mask(6, &[0, 3])));
        assert!(!subs.members.contains(&mask(6, &[3])));

        // The zero singleton is closed and associative but drops out when the
        // trivial filter is on; minimum-size filtering removes all singletons.
        assert!(subs.members.contains(&mask(6, &[0])));
        let filtered = enumerate_subsemigroups(&m, 1, true).unwrap();
        assert!(!filtered.members.contains(&mask(6, &[0])));
        let pairs_up = enumerate_subsemigroups(&m, 2, false).unwrap();
        assert!(pairs_up.members.iter().all(|s| s.len() >= 2));
    }

    #[test]
    fn ideal_sides_are_checked_independently() {
        // In Z_6(4,5), {1,3,5} absorbs from the left (4x+5a is odd for odd a)
        // but 1*0 = 4 escapes on the right.
        let m = zn(6, 4, 5);
        let odds = mask(6, &[1, 3, 5]);
        assert!(is_ideal(&m, &odds, IdealSide::Left).unwrap());
        let (ok, escape) = ideal_report(&m, &odds, IdealSide::Right).unwrap();
        assert!(!ok);
        let esc = escape.unwrap();
        assert_eq!(esc.side, IdealSide::Right);
        assert!(!is_ideal(&m, &odds, IdealSide::TwoSided).unwrap());
    }

    #[test]
    fn ideal_requires_closed_nonempty() {
        let m = zn(6, 4, 5);
        let err = ideal_report(&m, &mask(6, &[]), IdealSide::Left).unwrap_err();
        assert_eq!(err.code(), "NOT_CLOSED");
        let err = ideal_report(&m, &mask(6, &[1, 2]), IdealSide::Left).unwrap_err();
        assert_eq!(err.code(), "NOT_CLOSED");
    }

    #[test]
    fn normality_scopes_differ() {
        // V = evens in Z_12(2,10): under the printed quantifier (over V)
        // all three conditions hold; quantifying over G breaks them.
        let m = zn(12, 2, 10);
        let v = mask(12, &[0, 2, 4, 6, 8, 10]);
        assert!(is_normal_subgroupoid(&m, &v, NormalityScope::LiteralV).unwrap());
        assert!(!is_normal_subgroupoid(&m, &v, NormalityScope::OverG).unwrap());
    }

    #[test]
    fn normal_groupoid_scan() {
        // Z_5(2,3): rows/columns of 2a+3b mod 5 are Latin, so no proper
        // nontrivial closed subsets exist at all.
        let m = zn(5, 2, 3);
        assert!(is_simple(&m).unwrap());
        assert!(is_normal_groupoid(&m, NormalityScope::LiteralV).unwrap());
    }

    #[test]
    fn conjugate_subgroupoid_evidence() {
        // Z_12(1,3): {0,3,6,9} and {2,5,8,11} with 3*K giving H back.
        let m = zn(12, 1, 3);
        let h = mask(12, &[0, 3, 6, 9]);
        let k = mask(12, &[2, 5, 8, 11]);
        let hit = conjugate_subgroupoids_report(&m, &h, &k, MultiplierScope::InG)
            .unwrap()
            .unwrap();
        assert!(hit.1, "left translate should fire first");
        let err = conjugate_subgroupoids_report(&m, &h, &mask(12, &[0, 4, 8]), MultiplierScope::InG)
            .unwrap_err();
        assert_eq!(err.code(), "NOT_DISJOINT");
    }

    #[test]
    fn inner_commutativity_detects_noncommutative_semigroups() {
        // Z_6(4,5) holds the right-projection semigroup {0,3}: 0*3 = 15 ≡ 3,
        // 3*0 = 12 ≡ 0, so x*y = y there — associative, not commutative.
        let m = zn(6, 4, 5);
        let (ok, culprit) = is_inner_commutative(&m).unwrap();
        assert!(!ok);
        let c = culprit.unwrap();
        assert!(is_subset_associative(&m, &c).unwrap());
        assert!(!is_subset_commutative(&m, &c).unwrap());
    }

    #[test]
    fn full_carrier_associativity_agrees_with_basic_report() {
        for (n, t, u) in [(4, 2, 3), (6, 1, 3), (12, 4, 9), (7, 3, 4)] {
            let m = zn(n, t, u);
            let full = SubsetMask::full(n);
            assert_eq!(
                is_subset_associative(&m, &full).unwrap(),
                m.basic_report().associative,
                "Z_{n}({t},{u})"
            );
        }
    }
}
