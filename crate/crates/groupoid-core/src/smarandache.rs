//! Smarandache-structure detection: a magma is Smarandache when some proper
//! subset is a semigroup under the inherited operation. On top of the witness
//! search this module layers S-subgroupoids, S-ideals, S-(semi)normality,
//! S-(semi)conjugacy, commutativity notions, weak/strong law checking over
//! S-subgroupoids, morphisms between chosen subsemigroups, and direct
//! products with their subgroupoid-count floor.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::laws::{check_law_on, LawId};
use crate::magma::{FiniteMagma, Side, DEFAULT_PRODUCT_CAP};
use crate::subset::SubsetMask;
use crate::substructure::{
    enumerate_closed, enumerate_closed_bounded, induced_submagma, is_closed_subset, is_ideal,
    is_subset_associative, is_subset_commutative, is_trivial_subset, setwise_left, setwise_right,
    subset_in_range, ClosedSetFamily, IdealSide, DEFAULT_ENUMERATION_BOUND,
};

/// Largest semigroup size accepted by the morphism searches.
pub const MORPHISM_DOMAIN_BOUND: usize = 8;

/// Which proper subsets may serve as qualifying semigroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SPolicy {
    /// Discard the singleton of the designated zero. The zero singleton is
    /// always closed and associative, so counting it would make every magma
    /// with an absorbing zero Smarandache for free.
    pub exclude_trivial_zero: bool,
    /// Discard subsets with fewer elements than this.
    pub min_subset_size: usize,
}

impl Default for SPolicy {
    fn default() -> Self {
        SPolicy {
            exclude_trivial_zero: true,
            min_subset_size: 1,
        }
    }
}

/// A proper subset that is a semigroup under the inherited operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SgWitness {
    pub subset: SubsetMask,
    /// The witness is exactly the designated-zero singleton (only possible
    /// when the policy admits it).
    pub is_trivial: bool,
    pub commutative: bool,
}

fn admits(m: &FiniteMagma, subset: &SubsetMask, policy: SPolicy) -> bool {
    subset.len() >= policy.min_subset_size
        && !(policy.exclude_trivial_zero && is_trivial_subset(m, subset))
}

/// Does `subset` qualify as a Smarandache witness for `m`: proper, nonempty,
/// closed, associative, and admitted by the policy?
pub fn qualifying_semigroup(m: &FiniteMagma, subset: &SubsetMask, policy: SPolicy) -> Result<bool> {
    subset_in_range(m, subset)?;
    if subset.is_empty() || subset.is_full() || !admits(m, subset, policy) {
        return Ok(false);
    }
    Ok(is_closed_subset(m, subset)? && is_subset_associative(m, subset)?)
}

fn witness_from(m: &FiniteMagma, subset: SubsetMask) -> SgWitness {
    let is_trivial = is_trivial_subset(m, &subset);
    let commutative =
        is_subset_commutative(m, &subset).expect("witness subsets are always in range");
    SgWitness {
        subset,
        is_trivial,
        commutative,
    }
}

/// Lex-least admitted idempotent singleton among `elems` (which must be the
/// full candidate pool, so that any singleton is proper).
fn stage_singleton(m: &FiniteMagma, elems: &[usize], policy: SPolicy) -> Option<usize> {
    if policy.min_subset_size > 1 || elems.len() < 2 {
        return None;
    }
    elems.iter().copied().find(|&a| {
        m.at(a, a) == a && !(policy.exclude_trivial_zero && m.designated_zero() == Some(a))
    })
}

fn pair_is_closed_semigroup(m: &FiniteMagma, a: usize, b: usize) -> bool {
    let pair = [a, b];
    let inside = |x: usize| x == a || x == b;
    if !inside(m.at(a, a)) || !inside(m.at(a, b)) || !inside(m.at(b, a)) || !inside(m.at(b, b)) {
        return false;
    }
    // Closed two-element subsets are not automatically associative; the
    // eight bracketings have to be compared.
    pair.iter().all(|&x| {
        pair.iter()
            .all(|&y| pair.iter().all(|&z| m.at(m.at(x, y), z) == m.at(x, m.at(y, z))))
    })
}

/// Lex-least closed associative pair among `elems` (ascending). Pairs are
/// never the trivial zero singleton, so only the size filter applies.
fn stage_pair(m: &FiniteMagma, elems: &[usize], policy: SPolicy) -> Option<(usize, usize)> {
    if policy.min_subset_size > 2 || elems.len() < 3 {
        return None;
    }
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i + 1..] {
            if pair_is_closed_semigroup(m, a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Smallest qualifying semigroup (by size, then lexicographically), searched
/// in stages: idempotent singletons, then two-element subsets, then a full
/// closed-subset sweep. The sweep — and only the sweep — is subject to the
/// order bound, so small witnesses are found on magmas of any order.
pub fn smarandache_witness_bounded(
    m: &FiniteMagma,
    policy: SPolicy,
    order_bound: usize,
) -> Result<Option<SgWitness>> {
    let all: Vec<usize> = m.elements().collect();
    if let Some(a) = stage_singleton(m, &all, policy) {
        return Ok(Some(witness_from(m, SubsetMask::from_elems(m.order(), [a]))));
    }
    if let Some((a, b)) = stage_pair(m, &all, policy) {
        return Ok(Some(witness_from(
            m,
            SubsetMask::from_elems(m.order(), [a, b]),
        )));
    }
    if m.order() > order_bound {
        return Err(Error::OrderTooLarge {
            order: m.order(),
            bound: order_bound,
            operation: "smarandache witness sweep",
        });
    }
    let family = enumerate_closed_bounded(m, order_bound, usize::MAX)?;
    let mut best: Option<SubsetMask> = None;
    for s in family.members {
        if !qualifying_semigroup(m, &s, policy)? {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => (s.len(), &s) < (b.len(), b),
        };
        if better {
            best = Some(s);
        }
    }
    Ok(best.map(|s| witness_from(m, s)))
}

pub fn smarandache_witness(m: &FiniteMagma, policy: SPolicy) -> Result<Option<SgWitness>> {
    smarandache_witness_bounded(m, policy, DEFAULT_ENUMERATION_BOUND)
}

pub fn is_smarandache(m: &FiniteMagma, policy: SPolicy) -> Result<bool> {
    Ok(smarandache_witness(m, policy)?.is_some())
}

/// Does `h` strictly contain a policy-admitted semigroup? Same staging as
/// the witness search, with the full sweep running on the operation `h`
/// induces.
fn contains_qualifying_strictly(
    m: &FiniteMagma,
    h: &SubsetMask,
    policy: SPolicy,
    order_bound: usize,
) -> Result<bool> {
    let elems = h.to_vec();
    if stage_singleton(m, &elems, policy).is_some() || stage_pair(m, &elems, policy).is_some() {
        return Ok(true);
    }
    if elems.len() <= 2 {
        // Strict subsets can only have sizes one or two, all covered above.
        return Ok(false);
    }
    if elems.len() > order_bound {
        return Err(Error::OrderTooLarge {
            order: elems.len(),
            bound: order_bound,
            operation: "S-subgroupoid qualification sweep",
        });
    }
    let (sub, back) = induced_submagma(m, h)?;
    let family = enumerate_closed_bounded(&sub, order_bound, usize::MAX)?;
    for s in family.members {
        if s.is_empty() || s.is_full() {
            continue;
        }
        let parent = SubsetMask::from_elems(m.order(), s.iter().map(|i| back[i]));
        if qualifying_semigroup(m, &parent, policy)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A proper nonempty closed subset that is itself Smarandache under the
/// inherited operation (it strictly contains a qualifying semigroup).
pub fn is_s_subgroupoid(m: &FiniteMagma, h: &SubsetMask, policy: SPolicy) -> Result<bool> {
    subset_in_range(m, h)?;
    if h.is_empty() || h.is_full() || !is_closed_subset(m, h)? {
        return Ok(false);
    }
    contains_qualifying_strictly(m, h, policy, DEFAULT_ENUMERATION_BOUND)
}

/// All S-subgroupoids, in the closed-family enumeration order.
pub fn s_subgroupoids(m: &FiniteMagma, policy: SPolicy) -> Result<ClosedSetFamily> {
    let family = enumerate_closed(m)?;
    let mut members = Vec::new();
    for s in family.members {
        if s.is_empty() || s.is_full() {
            continue;
        }
        if contains_qualifying_strictly(m, &s, policy, DEFAULT_ENUMERATION_BOUND)? {
            members.push(s);
        }
    }
    Ok(ClosedSetFamily {
        members,
        complete: family.complete,
        bound_hit: family.bound_hit,
    })
}

/// An S-ideal is an S-subgroupoid absorbing on the given side. Non-closed
/// input is an error; a closed subgroupoid that is not Smarandache is
/// reported as `false`.
pub fn s_ideal(m: &FiniteMagma, v: &SubsetMask, side: IdealSide, policy: SPolicy) -> Result<bool> {
    subset_in_range(m, v)?;
    if v.is_empty() || !is_closed_subset(m, v)? {
        return Err(Error::NotClosed {
            subset: v.to_string(),
            reason: "S-ideals must be closed subgroupoids".into(),
        });
    }
    if !is_s_subgroupoid(m, v, policy)? {
        return Ok(false);
    }
    is_ideal(m, v, side)
}

fn require_s_subgroupoid(m: &FiniteMagma, v: &SubsetMask, policy: SPolicy) -> Result<()> {
    if !is_s_subgroupoid(m, v, policy)? {
        return Err(Error::NotSSubgroupoid {
            subset: v.to_string(),
        });
    }
    Ok(())
}

/// GV = union of aV over all a, and VG = union of Va.
fn setwise_products(m: &FiniteMagma, v: &SubsetMask) -> (SubsetMask, SubsetMask) {
    let mut gv = SubsetMask::empty(m.order());
    let mut vg = SubsetMask::empty(m.order());
    for a in m.elements() {
        gv = gv.union(&setwise_left(m, a, v));
        vg = vg.union(&setwise_right(m, v, a));
    }
    (gv, vg)
}

/// V (an S-subgroupoid) is S-seminormal when X = GV or Y = VG is again an
/// S-subgroupoid.
pub fn s_seminormal(m: &FiniteMagma, v: &SubsetMask, policy: SPolicy) -> Result<bool> {
    subset_in_range(m, v)?;
    require_s_subgroupoid(m, v, policy)?;
    let (gv, vg) = setwise_products(m, v);
    Ok(is_s_subgroupoid(m, &gv, policy)? || is_s_subgroupoid(m, &vg, policy)?)
}

/// V is S-normal when both GV and VG are S-subgroupoids.
pub fn s_normal(m: &FiniteMagma, v: &SubsetMask, policy: SPolicy) -> Result<bool> {
    subset_in_range(m, v)?;
    require_s_subgroupoid(m, v, policy)?;
    let (gv, vg) = setwise_products(m, v);
    Ok(is_s_subgroupoid(m, &gv, policy)? && is_s_subgroupoid(m, &vg, policy)?)
}

/// Multipliers witnessing a directed conjugacy: each entry `(x, side)` means
/// `x*from = to` (left) or `from*x = to` (right), ascending in `x`, left
/// before right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyEvidence {
    pub holds: bool,
    /// Multipliers carrying the second subset onto the first.
    pub forward: Vec<(usize, Side)>,
    /// Multipliers carrying the first subset onto the second (conjugacy
    /// only; empty for the semiconjugacy check).
    pub backward: Vec<(usize, Side)>,
}

fn one_sided_transporters(
    m: &FiniteMagma,
    from: &SubsetMask,
    to: &SubsetMask,
) -> Vec<(usize, Side)> {
    let mut out = Vec::new();
    for x in m.elements() {
        if setwise_left(m, x, from) == *to {
            out.push((x, Side::Left));
        }
        if setwise_right(m, from, x) == *to {
            out.push((x, Side::Right));
        }
    }
    out
}

/// H is S-semiconjugate to P when both are S-subgroupoids and H = xP or
/// H = Px for some x. Disjointness is not required; H may even equal P.
pub fn s_semiconjugate(
    m: &FiniteMagma,
    h: &SubsetMask,
    p: &SubsetMask,
    policy: SPolicy,
) -> Result<ConjugacyEvidence> {
    subset_in_range(m, h)?;
    subset_in_range(m, p)?;
    require_s_subgroupoid(m, h, policy)?;
    require_s_subgroupoid(m, p, policy)?;
    let forward = one_sided_transporters(m, p, h);
    Ok(ConjugacyEvidence {
        holds: !forward.is_empty(),
        forward,
        backward: Vec::new(),
    })
}

/// Conjugacy additionally needs a (possibly different) multiplier carrying
/// H onto P.
pub fn s_conjugate(
    m: &FiniteMagma,
    h: &SubsetMask,
    p: &SubsetMask,
    policy: SPolicy,
) -> Result<ConjugacyEvidence> {
    subset_in_range(m, h)?;
    subset_in_range(m, p)?;
    require_s_subgroupoid(m, h, policy)?;
    require_s_subgroupoid(m, p, policy)?;
    let forward = one_sided_transporters(m, p, h);
    let backward = one_sided_transporters(m, h, p);
    Ok(ConjugacyEvidence {
        holds: !forward.is_empty() && !backward.is_empty(),
        forward,
        backward,
    })
}

/// Some qualifying semigroup is commutative. The staged witness answers
/// immediately when it is commutative itself (singletons always are);
/// otherwise all qualifying subsets are swept.
pub fn s_commutative(m: &FiniteMagma, policy: SPolicy) -> Result<bool> {
    match smarandache_witness(m, policy)? {
        None => Ok(false),
        Some(w) if w.commutative => Ok(true),
        Some(_) => {
            let family = enumerate_closed(m)?;
            for s in family.members {
                if qualifying_semigroup(m, &s, policy)? && is_subset_commutative(m, &s)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// Every policy-admitted semigroup contained in any S-subgroupoid is
/// commutative (the S-subgroupoid itself counts as one of its subsets).
/// Vacuously true when there are no S-subgroupoids.
pub fn s_inner_commutative(m: &FiniteMagma, policy: SPolicy) -> Result<bool> {
    let family = enumerate_closed(m)?;
    let mut subs = Vec::new();
    for s in &family.members {
        if s.is_empty() || s.is_full() {
            continue;
        }
        if contains_qualifying_strictly(m, s, policy, DEFAULT_ENUMERATION_BOUND)? {
            subs.push(s.clone());
        }
    }
    if subs.is_empty() {
        return Ok(true);
    }
    for k in &family.members {
        if k.is_empty() || !admits(m, k, policy) {
            continue;
        }
        if !is_subset_associative(m, k)? || is_subset_commutative(m, k)? {
            continue;
        }
        if subs.iter().any(|h| k.is_subset_of(h)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SLawStrength {
    /// The law holds on at least one S-subgroupoid.
    Weak,
    /// The law holds on every S-subgroupoid.
    Strong,
}

#[derive(Debug, Clone)]
pub struct SLawReport {
    pub law: LawId,
    pub strength: SLawStrength,
    pub holds: bool,
    /// Verdict per S-subgroupoid, in enumeration order.
    pub details: Vec<(SubsetMask, bool)>,
}

/// Law verdicts over a precomputed list of S-subgroupoids. Split out so a
/// census can reuse one enumeration across all six laws and both strengths.
pub fn s_law_over(
    m: &FiniteMagma,
    law: LawId,
    strength: SLawStrength,
    subs: &[SubsetMask],
) -> SLawReport {
    let details: Vec<(SubsetMask, bool)> = subs
        .iter()
        .map(|h| {
            let verdict = check_law_on(m, law, &h.to_vec(), false).holds;
            (h.clone(), verdict)
        })
        .collect();
    let holds = match strength {
        SLawStrength::Weak => details.iter().any(|(_, v)| *v),
        SLawStrength::Strong => details.iter().all(|(_, v)| *v),
    };
    SLawReport {
        law,
        strength,
        holds,
        details,
    }
}

/// Weak/strong Smarandache law check over the S-subgroupoids of a magma
/// that must itself be Smarandache.
pub fn s_law(
    m: &FiniteMagma,
    law: LawId,
    strength: SLawStrength,
    policy: SPolicy,
) -> Result<SLawReport> {
    if !is_smarandache(m, policy)? {
        return Err(Error::NotSmarandache);
    }
    let subs = s_subgroupoids(m, policy)?;
    Ok(s_law_over(m, law, strength, &subs.members))
}

/// Smarandache and every element is idempotent. The idempotency scan runs
/// first, so non-idempotent magmas of any order answer `false` cheaply.
pub fn s_idempotent(m: &FiniteMagma, policy: SPolicy) -> Result<bool> {
    if !m.elements().all(|a| m.at(a, a) == a) {
        return Ok(false);
    }
    is_smarandache(m, policy)
}

fn require_semigroup(m: &FiniteMagma, subset: &SubsetMask) -> Result<Vec<usize>> {
    subset_in_range(m, subset)?;
    if subset.is_empty() {
        return Err(Error::NotSemigroup {
            subset: subset.to_string(),
            reason: "empty subset".into(),
        });
    }
    if !is_closed_subset(m, subset)? {
        return Err(Error::NotSemigroup {
            subset: subset.to_string(),
            reason: "not closed under the operation".into(),
        });
    }
    if !is_subset_associative(m, subset)? {
        return Err(Error::NotSemigroup {
            subset: subset.to_string(),
            reason: "operation is not associative on the subset".into(),
        });
    }
    Ok(subset.to_vec())
}

struct HomSearch<'a> {
    dom_m: &'a FiniteMagma,
    cod_m: &'a FiniteMagma,
    dom: &'a [usize],
    cod: &'a [usize],
    /// Domain element -> its position in `dom`.
    pos_of: Vec<usize>,
}

impl<'a> HomSearch<'a> {
    fn new(dom_m: &'a FiniteMagma, dom: &'a [usize], cod_m: &'a FiniteMagma, cod: &'a [usize]) -> Self {
        let mut pos_of = vec![usize::MAX; dom_m.order()];
        for (i, &e) in dom.iter().enumerate() {
            pos_of[e] = i;
        }
        HomSearch {
            dom_m,
            cod_m,
            dom,
            cod,
            pos_of,
        }
    }

    /// With positions 0..phi.len() assigned, is every constraint whose three
    /// participants are assigned satisfied? Only constraints touching the
    /// newest position need checking.
    fn consistent_at(&self, phi: &[usize]) -> bool {
        let k = phi.len() - 1;
        for i in 0..=k {
            for j in 0..=k {
                let pp = self.pos_of[self.dom_m.at(self.dom[i], self.dom[j])];
                if i != k && j != k {
                    // Settled earlier unless the product slot just appeared.
                    if pp == k && self.cod_m.at(phi[i], phi[j]) != phi[k] {
                        return false;
                    }
                } else if pp <= k && self.cod_m.at(phi[i], phi[j]) != phi[pp] {
                    return false;
                }
            }
        }
        true
    }

    fn collect_into(&self, phi: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if phi.len() == self.dom.len() {
            out.push(phi.clone());
            return;
        }
        for &c in self.cod {
            phi.push(c);
            if self.consistent_at(phi) {
                self.collect_into(phi, out);
            }
            phi.pop();
        }
    }

    fn all(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.collect_into(&mut Vec::new(), &mut out);
        out
    }

    fn any_surjective_from(&self, phi: &mut Vec<usize>, image: &mut SubsetMask) -> bool {
        let distinct = image.len();
        if phi.len() == self.dom.len() {
            return distinct == self.cod.len();
        }
        if self.cod.len() - distinct > self.dom.len() - phi.len() {
            return false;
        }
        for &c in self.cod {
            phi.push(c);
            let fresh = !image.contains(c);
            image.insert(c);
            if self.consistent_at(phi) && self.any_surjective_from(phi, image) {
                return true;
            }
            phi.pop();
            if fresh {
                image.remove(c);
            }
        }
        false
    }

    fn any_surjective(&self) -> bool {
        let mut image = SubsetMask::empty(self.cod_m.order());
        self.any_surjective_from(&mut Vec::new(), &mut image)
    }
}

/// All operation-preserving maps from the semigroup `a1` in `g1` to the
/// semigroup `a2` in `g2`. Each map lists the images (as `g2` element
/// numbers) of the elements of `a1` in ascending order; the result is
/// lexicographically sorted.
pub fn s_homomorphisms(
    g1: &FiniteMagma,
    a1: &SubsetMask,
    g2: &FiniteMagma,
    a2: &SubsetMask,
) -> Result<Vec<Vec<usize>>> {
    let dom = require_semigroup(g1, a1)?;
    let cod = require_semigroup(g2, a2)?;
    let largest = dom.len().max(cod.len());
    if largest > MORPHISM_DOMAIN_BOUND {
        return Err(Error::OrderTooLarge {
            order: largest,
            bound: MORPHISM_DOMAIN_BOUND,
            operation: "semigroup morphism search",
        });
    }
    Ok(HomSearch::new(g1, &dom, g2, &cod).all())
}

/// Some bijective operation-preserving map between the chosen semigroups.
pub fn s_isomorphic(
    g1: &FiniteMagma,
    a1: &SubsetMask,
    g2: &FiniteMagma,
    a2: &SubsetMask,
) -> Result<bool> {
    let dom = require_semigroup(g1, a1)?;
    let cod = require_semigroup(g2, a2)?;
    if dom.len() != cod.len() {
        return Ok(false);
    }
    let largest = dom.len();
    if largest > MORPHISM_DOMAIN_BOUND {
        return Err(Error::OrderTooLarge {
            order: largest,
            bound: MORPHISM_DOMAIN_BOUND,
            operation: "semigroup morphism search",
        });
    }
    // A surjection between equal finite sets is a bijection.
    Ok(HomSearch::new(g1, &dom, g2, &cod).any_surjective())
}

/// The direct product of the factors together with its staged Smarandache
/// witness, if any.
pub fn s_direct_product(
    factors: &[&FiniteMagma],
    policy: SPolicy,
) -> Result<(FiniteMagma, Option<SgWitness>)> {
    let product = FiniteMagma::direct_product(factors)?;
    let witness = smarandache_witness(&product, policy)?;
    Ok((product, witness))
}

/// Outcome of comparing the S-subgroupoid count of a product against the
/// combinatorial floor 2^r - 2 guaranteed by its r Smarandache factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundCheck {
    pub found: usize,
    pub bound: usize,
    pub ok: bool,
}

/// Counts the S-subgroupoids of the product of Smarandache factors and
/// compares against the floor 2^r - 2.
pub fn s_subgroupoid_bound_check(
    factors: &[&FiniteMagma],
    policy: SPolicy,
) -> Result<BoundCheck> {
    for f in factors {
        if !is_smarandache(f, policy)? {
            return Err(Error::NotSmarandache);
        }
    }
    let product = FiniteMagma::direct_product(factors)?;
    let bound = (1usize << factors.len()) - 2;
    let found = s_subgroupoids(&product, policy)?.members.len();
    Ok(BoundCheck {
        found,
        bound,
        ok: found >= bound,
    })
}

/// The subset B1 x ... x Br of the direct product of the factors, in the
/// product's element numbering. Block i must be a subset of factor i. Useful
/// for naming product subsets directly when the product is too large to
/// enumerate.
pub fn product_block_subset(
    factors: &[&FiniteMagma],
    blocks: &[SubsetMask],
) -> Result<SubsetMask> {
    if factors.len() < 2 || factors.len() != blocks.len() {
        return Err(Error::InvalidSpec(format!(
            "need one block per factor and at least two factors (got {} factors, {} blocks)",
            factors.len(),
            blocks.len()
        )));
    }
    let mut width = 1usize;
    for (f, b) in factors.iter().zip(blocks) {
        if b.width() != f.order() {
            return Err(Error::SubsetOutOfRange {
                width: b.width(),
                order: f.order(),
            });
        }
        width = width
            .checked_mul(f.order())
            .filter(|&w| w <= DEFAULT_PRODUCT_CAP)
            .ok_or(Error::ProductOrderOverflow {
                requested: width.saturating_mul(f.order()),
                cap: DEFAULT_PRODUCT_CAP,
            })?;
    }
    let mut out = SubsetMask::empty(width);
    for tuple in blocks.iter().map(|b| b.to_vec()).multi_cartesian_product() {
        let mut code = 0usize;
        for (f, e) in factors.iter().zip(tuple) {
            code = code * f.order() + e;
        }
        out.insert(code);
    }
    Ok(out)
}

/// S1 divides S2 when some subsemigroup of S2 admits a surjective
/// operation-preserving map onto S1.
pub fn sg_divides(
    g1: &FiniteMagma,
    s1: &SubsetMask,
    g2: &FiniteMagma,
    s2: &SubsetMask,
) -> Result<bool> {
    let target = require_semigroup(g1, s1)?;
    let source = require_semigroup(g2, s2)?;
    if source.len() > MORPHISM_DOMAIN_BOUND {
        return Err(Error::OrderTooLarge {
            order: source.len(),
            bound: MORPHISM_DOMAIN_BOUND,
            operation: "semigroup divisibility search",
        });
    }
    if target.len() > source.len() {
        return Ok(false);
    }
    for selector in 1usize..(1 << source.len()) {
        let t: Vec<usize> = source
            .iter()
            .enumerate()
            .filter(|(i, _)| selector & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        if t.len() < target.len() {
            continue;
        }
        let t_mask = SubsetMask::from_elems(g2.order(), t.iter().copied());
        // Closed subsets of a semigroup are themselves semigroups.
        if !is_closed_subset(g2, &t_mask)? {
            continue;
        }
        if HomSearch::new(g2, &t, g1, &target).any_surjective() {
            return Ok(true);
        }
    }
    Ok(false)
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
    fn witness_is_smallest_then_lex() {
        // In Z_6(1,3) the idempotents are 0, 2, 4; the zero singleton is
        // trivial, so the staged search lands on {2}. The two-element
        // semigroup {0,3} still qualifies, it just is not minimal.
        let m = zn(6, 1, 3);
        let w = smarandache_witness(&m, SPolicy::default()).unwrap().unwrap();
        assert_eq!(w.subset, mask(6, &[2]));
        assert!(w.commutative);
        assert!(!w.is_trivial);
        assert!(qualifying_semigroup(&m, &mask(6, &[0, 3]), SPolicy::default()).unwrap());

        let lax = SPolicy {
            exclude_trivial_zero: false,
            ..SPolicy::default()
        };
        let w0 = smarandache_witness(&m, lax).unwrap().unwrap();
        assert_eq!(w0.subset, mask(6, &[0]));
        assert!(w0.is_trivial);

        let pairs_only = SPolicy {
            min_subset_size: 2,
            ..SPolicy::default()
        };
        let wp = smarandache_witness(&zn(6, 4, 5), pairs_only).unwrap().unwrap();
        assert_eq!(wp.subset, mask(6, &[0, 3]));
    }

    #[test]
    fn half_shift_witnesses() {
        // In Z_2p(1,2) the element p is the unique nonzero idempotent.
        for p in [3usize, 5, 7] {
            let m = zn(2 * p, 1, 2);
            let w = smarandache_witness(&m, SPolicy::default()).unwrap().unwrap();
            assert_eq!(w.subset, mask(2 * p, &[p]));
        }
    }

    #[test]
    fn coprime_pairs_mod_five_are_never_smarandache() {
        for t in 1..5usize {
            for u in 1..5usize {
                if t == u || num_integer::gcd(t, u) != 1 {
                    continue;
                }
                let m = zn(5, t, u);
                assert!(
                    !is_smarandache(&m, SPolicy::default()).unwrap(),
                    "Z_5({t},{u}) unexpectedly has a qualifying semigroup"
                );
            }
        }
    }

    #[test]
    fn s_subgroupoid_family_of_z6_4_5() {
        let m = zn(6, 4, 5);
        let family = s_subgroupoids(&m, SPolicy::default()).unwrap();
        assert!(family.complete);
        // The odds contain the idempotent {3}; the evens contain no
        // qualifying semigroup at all.
        assert!(family.members.contains(&mask(6, &[1, 3, 5])));
        assert!(!family.members.contains(&mask(6, &[0, 2, 4])));
        assert!(is_s_subgroupoid(&m, &mask(6, &[0, 3]), SPolicy::default()).unwrap());
    }

    #[test]
    fn s_ideal_needs_s_structure_on_top_of_absorption() {
        // {0,2,4} absorbs on both sides in Z_6(2,4) but contains no
        // qualifying semigroup, so it is an ideal without being an S-ideal.
        let m = zn(6, 2, 4);
        let evens = mask(6, &[0, 2, 4]);
        assert!(is_ideal(&m, &evens, IdealSide::TwoSided).unwrap());
        assert!(!s_ideal(&m, &evens, IdealSide::TwoSided, SPolicy::default()).unwrap());

        let m = zn(6, 4, 5);
        let odds = mask(6, &[1, 3, 5]);
        assert!(s_ideal(&m, &odds, IdealSide::Left, SPolicy::default()).unwrap());
        assert!(!s_ideal(&m, &odds, IdealSide::Right, SPolicy::default()).unwrap());

        let open = mask(6, &[1, 4]);
        let err = s_ideal(&m, &open, IdealSide::Left, SPolicy::default()).unwrap_err();
        assert_eq!(err.code(), "NOT_CLOSED");
    }

    #[test]
    fn seminormal_and_normal_split() {
        // GV = V for the odds of Z_6(4,5) but VG is the whole carrier, so
        // only the seminormal half survives.
        let m = zn(6, 4, 5);
        let odds = mask(6, &[1, 3, 5]);
        assert!(s_seminormal(&m, &odds, SPolicy::default()).unwrap());
        assert!(!s_normal(&m, &odds, SPolicy::default()).unwrap());

        // Both products recover V for the evens of Z_8(2,6).
        let m8 = zn(8, 2, 6);
        let evens = mask(8, &[0, 2, 4, 6]);
        assert!(s_normal(&m8, &evens, SPolicy::default()).unwrap());

        let err = s_seminormal(&m, &mask(6, &[0, 2, 4]), SPolicy::default()).unwrap_err();
        assert_eq!(err.code(), "NOT_S_SUBGROUPOID");
    }

    #[test]
    fn conjugacy_multipliers_are_reported() {
        // 3*{2,5,8,11} = {0,3,6,9} and 2*{0,3,6,9} = {2,5,8,11} in Z_12(1,3).
        let m = zn(12, 1, 3);
        let h = mask(12, &[0, 3, 6, 9]);
        let p = mask(12, &[2, 5, 8, 11]);
        let ev = s_conjugate(&m, &h, &p, SPolicy::default()).unwrap();
        assert!(ev.holds);
        assert!(ev.forward.contains(&(3, Side::Left)));
        assert!(ev.backward.contains(&(2, Side::Left)));

        let semi = s_semiconjugate(&m, &h, &p, SPolicy::default()).unwrap();
        assert!(semi.holds);
        assert!(semi.backward.is_empty());
        assert_eq!(semi.forward, ev.forward);
    }

    #[test]
    fn commutativity_depends_on_the_trivial_zero_policy() {
        // The only qualifying semigroup of Z_3(1,2) is the zero singleton,
        // so the default policy rejects the magma outright while the lax
        // policy accepts it as Smarandache commutative. The same table
        // without a designated zero (three abstract symbols) qualifies
        // under the default policy.
        let m = zn(3, 1, 2);
        assert!(!s_commutative(&m, SPolicy::default()).unwrap());
        let lax = SPolicy {
            exclude_trivial_zero: false,
            ..SPolicy::default()
        };
        assert!(s_commutative(&m, lax).unwrap());

        let abstract_table =
            FiniteMagma::build_table(3, vec![0, 2, 1, 1, 0, 2, 2, 1, 0], None).unwrap();
        assert!(s_commutative(&abstract_table, SPolicy::default()).unwrap());
    }

    #[test]
    fn inner_commutativity() {
        // Z_5(3,3) has no S-subgroupoids at all, so the condition is
        // vacuous; Z_6(4,5) fails it through the noncommutative semigroup
        // {0,3} sitting inside the S-subgroupoid {0,3}.
        assert!(s_inner_commutative(&zn(5, 3, 3), SPolicy::default()).unwrap());
        assert!(!s_inner_commutative(&zn(6, 4, 5), SPolicy::default()).unwrap());
    }

    #[test]
    fn weak_law_holds_where_strong_fails() {
        let m = zn(12, 3, 9);
        let weak = s_law(&m, LawId::Moufang, SLawStrength::Weak, SPolicy::default()).unwrap();
        let strong = s_law(&m, LawId::Moufang, SLawStrength::Strong, SPolicy::default()).unwrap();
        assert!(weak.holds);
        assert!(!strong.holds);
        let lookup = |subset: &SubsetMask, report: &SLawReport| {
            report
                .details
                .iter()
                .find(|(s, _)| s == subset)
                .map(|(_, v)| *v)
        };
        assert_eq!(lookup(&mask(12, &[0, 4, 8]), &weak), Some(true));
        assert_eq!(lookup(&mask(12, &[0, 3, 6, 9]), &weak), Some(false));

        let err = s_law(&zn(5, 1, 2), LawId::Moufang, SLawStrength::Weak, SPolicy::default())
            .unwrap_err();
        assert_eq!(err.code(), "NOT_SMARANDACHE");
    }

    #[test]
    fn idempotent_smarandache_needs_full_diagonal() {
        assert!(s_idempotent(&zn(5, 2, 4), SPolicy::default()).unwrap());
        assert!(!s_idempotent(&zn(6, 4, 5), SPolicy::default()).unwrap());
        let adjoined = build_zn(&ZnSpec::new(6, 4, 5, true).unwrap());
        assert!(!s_idempotent(&adjoined, SPolicy::default()).unwrap());
    }

    #[test]
    fn homomorphisms_between_chosen_semigroups() {
        let g1 = zn(4, 2, 3);
        let g2 = zn(6, 4, 5);
        let maps = s_homomorphisms(&g1, &mask(4, &[3]), &g2, &mask(6, &[3])).unwrap();
        assert_eq!(maps, vec![vec![3]]);
        assert!(s_isomorphic(&g1, &mask(4, &[3]), &g2, &mask(6, &[3])).unwrap());

        // Two copies of the two-element group: the constant-at-identity map
        // and the identity map are the only morphisms.
        let g3 = zn(12, 1, 3);
        let g4 = zn(6, 1, 3);
        let maps = s_homomorphisms(&g3, &mask(12, &[0, 6]), &g4, &mask(6, &[0, 3])).unwrap();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 3]]);
        assert!(s_isomorphic(&g3, &mask(12, &[0, 6]), &g4, &mask(6, &[0, 3])).unwrap());

        let err = s_homomorphisms(&g1, &mask(4, &[1, 2]), &g2, &mask(6, &[3])).unwrap_err();
        assert_eq!(err.code(), "NOT_SEMIGROUP");
    }

    #[test]
    fn products_carry_witnesses_and_meet_the_floor() {
        let a = zn(6, 1, 3);
        let b = zn(4, 2, 3);
        let check = s_subgroupoid_bound_check(&[&a, &b], SPolicy::default()).unwrap();
        assert_eq!(check.bound, 2);
        assert!(check.ok);

        let (product, witness) =
            s_direct_product(&[&zn(3, 2, 1), &zn(4, 1, 3)], SPolicy::default()).unwrap();
        assert_eq!(product.order(), 12);
        assert!(witness.is_some());
        assert!(qualifying_semigroup(&product, &mask(12, &[0, 2]), SPolicy::default()).unwrap());

        let err = s_subgroupoid_bound_check(&[&zn(5, 1, 2), &b], SPolicy::default()).unwrap_err();
        assert_eq!(err.code(), "NOT_SMARANDACHE");
    }

    #[test]
    fn block_subsets_use_product_coordinates() {
        let a = zn(6, 1, 3);
        let b = zn(4, 2, 3);
        let block = product_block_subset(&[&a, &b], &[mask(6, &[0, 3]), mask(4, &[1])]).unwrap();
        assert_eq!(block, mask(24, &[1, 13]));
        let err = product_block_subset(&[&a, &b], &[mask(4, &[1]), mask(4, &[1])]).unwrap_err();
        assert_eq!(err.code(), "SUBSET_OUT_OF_RANGE");
    }

    #[test]
    fn divisibility_collapses_and_respects_size() {
        let g1 = zn(6, 4, 5);
        let g2 = zn(6, 1, 3);
        // {0,3} maps onto the idempotent singleton {3} by collapsing.
        assert!(sg_divides(&g1, &mask(6, &[3]), &g2, &mask(6, &[0, 3])).unwrap());
        assert!(sg_divides(&g2, &mask(6, &[0, 3]), &g2, &mask(6, &[0, 3])).unwrap());
        // Nothing inside a singleton surjects onto a two-element semigroup.
        assert!(!sg_divides(&g2, &mask(6, &[0, 3]), &g1, &mask(6, &[3])).unwrap());
    }
}
