use crate::error::{Error, Result};
use crate::subset::SubsetMask;
use itertools::Itertools;
use std::fmt;

/// Hard cap on direct-product order unless a caller raises it explicitly.
pub const DEFAULT_PRODUCT_CAP: usize = 4096;
/// Isomorphism search is factorial; six elements is plenty for the tiny
/// counting questions this crate serves.
pub const DEFAULT_ISOMORPHISM_BOUND: usize = 6;

/// A finite magma ("groupoid" throughout this project): a carrier
/// `{0, .., order-1}` with one total binary operation given by a row-major
/// Cayley table (row = left operand). No law beyond closure is assumed.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteMagma {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
    designated_zero: Option<usize>,
}

impl fmt::Debug for FiniteMagma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteMagma(order={}, table={:?})", self.order, self.table)
    }
}

impl FiniteMagma {
    /// Validates and wraps a flat row-major table.
    pub fn build_table(
        order: usize,
        entries: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteMagma> {
        if order == 0 {
            return Err(Error::InvalidSpec("order must be positive".into()));
        }
        let expected = order * order;
        if entries.len() != expected {
            return Err(Error::LengthMismatch {
                order,
                expected,
                actual: entries.len(),
            });
        }
        if let Some((position, &entry)) = entries.iter().find_position(|&&e| e >= order) {
            return Err(Error::EntryOutOfRange {
                entry,
                position,
                order,
            });
        }
        if let Some(ls) = &labels {
            if ls.len() != order {
                return Err(Error::LengthMismatch {
                    order,
                    expected: order,
                    actual: ls.len(),
                });
            }
            if !ls.iter().all_unique() {
                return Err(Error::InvalidSpec("labels must be distinct".into()));
            }
        }
        Ok(FiniteMagma {
            order,
            table: entries,
            labels,
            designated_zero: None,
        })
    }

    /// Convenience constructor from rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<FiniteMagma> {
        let order = rows.len();
        for row in rows {
            if row.len() != order {
                return Err(Error::LengthMismatch {
                    order,
                    expected: order,
                    actual: row.len(),
                });
            }
        }
        Self::build_table(order, rows.concat(), None)
    }

    pub fn with_designated_zero(mut self, zero: Option<usize>) -> Result<FiniteMagma> {
        if let Some(z) = zero {
            if z >= self.order {
                return Err(Error::IndexOutOfRange {
                    index: z,
                    order: self.order,
                });
            }
        }
        self.designated_zero = zero;
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<FiniteMagma> {
        if labels.len() != self.order {
            return Err(Error::LengthMismatch {
                order: self.order,
                expected: self.order,
                actual: labels.len(),
            });
        }
        if !labels.iter().all_unique() {
            return Err(Error::InvalidSpec("labels must be distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn designated_zero(&self) -> Option<usize> {
        self.designated_zero
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, elem: usize) -> String {
        match &self.labels {
            Some(ls) if elem < ls.len() => ls[elem].clone(),
            _ => elem.to_string(),
        }
    }

    /// Bounds-checked product.
    pub fn product(&self, a: usize, b: usize) -> Result<usize> {
        for idx in [a, b] {
            if idx >= self.order {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    order: self.order,
                });
            }
        }
        Ok(self.at(a, b))
    }

    /// Unchecked table read; callers guarantee `a, b < order`.
    #[inline]
    pub fn at(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        self.table[a * self.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// True when both magmas have identical Cayley tables (labels ignored).
    pub fn same_table(&self, other: &FiniteMagma) -> bool {
        self.order == other.order && self.table == other.table
    }

    /// Exhaustive scan for every first-order predicate of interest.
    /// Witnesses are lexicographically first.
    pub fn basic_report(&self) -> BasicReport {
        let n = self.order;
        let mut commutative_witness = None;
        'comm: for a in 0..n {
            for b in 0..n {
                let (ab, ba) = (self.at(a, b), self.at(b, a));
                if ab != ba {
                    commutative_witness = Some(Witness::pair(a, b, ab, ba));
                    break 'comm;
                }
            }
        }
        let mut associative_witness = None;
        'assoc: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.at(self.at(a, b), c);
                    let rhs = self.at(a, self.at(b, c));
                    if lhs != rhs {
                        associative_witness = Some(Witness::triple(a, b, c, lhs, rhs));
                        break 'assoc;
                    }
                }
            }
        }
        let mut left_identities = SubsetMask::empty(n);
        let mut right_identities = SubsetMask::empty(n);
        for e in 0..n {
            if (0..n).all(|a| self.at(e, a) == a) {
                left_identities.insert(e);
            }
            if (0..n).all(|a| self.at(a, e) == a) {
                right_identities.insert(e);
            }
        }
        let two_sided_identities = left_identities.intersect(&right_identities);
        let mut idempotents = SubsetMask::empty(n);
        for a in 0..n {
            if self.at(a, a) == a {
                idempotents.insert(a);
            }
        }
        let strictly_noncommutative = (0..n)
            .all(|a| (0..n).all(|b| a == b || self.at(a, b) != self.at(b, a)));
        BasicReport {
            commutative: commutative_witness.is_none(),
            commutative_witness,
            associative: associative_witness.is_none(),
            associative_witness,
            left_identities,
            right_identities,
            two_sided_identities,
            idempotents,
            strictly_noncommutative,
        }
    }

    /// `C(G) = {x | ax = xa for all a}`.
    pub fn center(&self) -> SubsetMask {
        let n = self.order;
        let mut c = SubsetMask::empty(n);
        for x in 0..n {
            if (0..n).all(|a| self.at(a, x) == self.at(x, a)) {
                c.insert(x);
            }
        }
        c
    }

    /// Elements with a one-sided zero divisor relative to `zero`: `a` lands in
    /// `right` when `a*b = zero` for some `b != zero`, and in `left` when
    /// `b*a = zero`; `zero` itself is excluded on both sides.
    pub fn zero_divisor_report(&self, zero: usize) -> Result<ZeroDivisorReport> {
        if zero >= self.order {
            return Err(Error::IndexOutOfRange {
                index: zero,
                order: self.order,
            });
        }
        let n = self.order;
        let mut left = SubsetMask::empty(n);
        let mut right = SubsetMask::empty(n);
        for a in 0..n {
            if a == zero {
                continue;
            }
            if (0..n).any(|b| b != zero && self.at(a, b) == zero) {
                right.insert(a);
            }
            if (0..n).any(|b| b != zero && self.at(b, a) == zero) {
                left.insert(a);
            }
        }
        Ok(ZeroDivisorReport { left, right })
    }

    /// Unordered pairs `{a,b}` where each element is a one-sided multiple of
    /// the other. Every working multiplier is listed, ascending, left side
    /// before right at the same multiplier.
    pub fn conjugate_pairs(&self) -> Vec<ConjugatePair> {
        let n = self.order;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let a_from_b = self.one_sided_multipliers(b, a);
                if a_from_b.is_empty() {
                    continue;
                }
                let b_from_a = self.one_sided_multipliers(a, b);
                if b_from_a.is_empty() {
                    continue;
                }
                out.push(ConjugatePair {
                    a,
                    b,
                    a_from_b,
                    b_from_a,
                });
            }
        }
        out
    }

    /// All `(x, side)` with `x*from = to` (left) or `from*x = to` (right).
    fn one_sided_multipliers(&self, from: usize, to: usize) -> Vec<(usize, Side)> {
        let mut v = Vec::new();
        for x in 0..self.order {
            if self.at(x, from) == to {
                v.push((x, Side::Left));
            }
            if self.at(from, x) == to {
                v.push((x, Side::Right));
            }
        }
        v
    }

    /// A loop is a magma with a two-sided identity whose table is a Latin
    /// square. The first defect found (identity, then rows, then columns) is
    /// reported.
    pub fn loop_report(&self) -> LoopReport {
        let n = self.order;
        let basic = self.basic_report();
        if basic.two_sided_identities.is_empty() {
            return LoopReport {
                is_loop: false,
                defect: Some(LoopDefect::NoIdentity),
            };
        }
        for r in 0..n {
            let mut seen = vec![None; n];
            for c in 0..n {
                let v = self.at(r, c);
                if let Some(prev) = seen[v] {
                    return LoopReport {
                        is_loop: false,
                        defect: Some(LoopDefect::RowRepeat {
                            row: r,
                            col_a: prev,
                            col_b: c,
                            value: v,
                        }),
                    };
                }
                seen[v] = Some(c);
            }
        }
        for c in 0..n {
            let mut seen = vec![None; n];
            for r in 0..n {
                let v = self.at(r, c);
                if let Some(prev) = seen[v] {
                    return LoopReport {
                        is_loop: false,
                        defect: Some(LoopDefect::ColRepeat {
                            col: c,
                            row_a: prev,
                            row_b: r,
                            value: v,
                        }),
                    };
                }
                seen[v] = Some(r);
            }
        }
        LoopReport {
            is_loop: true,
            defect: None,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.loop_report().is_loop
    }

    /// Componentwise product with mixed-radix element encoding; the first
    /// factor is the most significant digit. Labels become label tuples and
    /// the designated zero survives only when every factor has one.
    pub fn direct_product(factors: &[&FiniteMagma]) -> Result<FiniteMagma> {
        Self::direct_product_capped(factors, DEFAULT_PRODUCT_CAP)
    }

    pub fn direct_product_capped(factors: &[&FiniteMagma], cap: usize) -> Result<FiniteMagma> {
        if factors.len() < 2 {
            return Err(Error::InvalidSpec(
                "direct product needs at least two factors".into(),
            ));
        }
        let mut order = 1usize;
        for f in factors {
            order = order
                .checked_mul(f.order)
                .ok_or(Error::ProductOrderOverflow {
                    requested: usize::MAX,
                    cap,
                })?;
        }
        if order > cap {
            return Err(Error::ProductOrderOverflow {
                requested: order,
                cap,
            });
        }
        let k = factors.len();
        let decode = |mut idx: usize| -> Vec<usize> {
            let mut digits = vec![0; k];
            for i in (0..k).rev() {
                digits[i] = idx % factors[i].order;
                idx /= factors[i].order;
            }
            digits
        };
        let encode = |digits: &[usize]| -> usize {
            digits
                .iter()
                .zip(factors)
                .fold(0, |acc, (&d, f)| acc * f.order + d)
        };
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let da = decode(a);
            for b in 0..order {
                let db = decode(b);
                let prod: Vec<usize> = (0..k).map(|i| factors[i].at(da[i], db[i])).collect();
                table.push(encode(&prod));
            }
        }
        let labels = (0..order)
            .map(|idx| {
                let digits = decode(idx);
                let parts: Vec<String> = digits
                    .iter()
                    .zip(factors)
                    .map(|(&d, f)| f.label_of(d))
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let zero = factors
            .iter()
            .map(|f| f.designated_zero)
            .collect::<Option<Vec<usize>>>()
            .map(|zs| encode(&zs));
        FiniteMagma::build_table(order, table, Some(labels))?.with_designated_zero(zero)
    }

    /// Brute-force isomorphism search over all bijections; `None` when no
    /// bijection carries one table to the other.
    pub fn are_isomorphic(m1: &FiniteMagma, m2: &FiniteMagma) -> Result<Option<Vec<usize>>> {
        Self::are_isomorphic_bounded(m1, m2, DEFAULT_ISOMORPHISM_BOUND)
    }

    pub fn are_isomorphic_bounded(
        m1: &FiniteMagma,
        m2: &FiniteMagma,
        bound: usize,
    ) -> Result<Option<Vec<usize>>> {
        if m1.order != m2.order {
            return Err(Error::OrderMismatch {
                left: m1.order,
                right: m2.order,
            });
        }
        if m1.order > bound {
            return Err(Error::OrderTooLarge {
                order: m1.order,
                bound,
                operation: "isomorphism search",
            });
        }
        let n = m1.order;
        for perm in (0..n).permutations(n) {
            if (0..n).all(|a| (0..n).all(|b| perm[m1.at(a, b)] == m2.at(perm[a], perm[b]))) {
                return Ok(Some(perm));
            }
        }
        Ok(None)
    }

    /// Relabels elements: old element `i` becomes `perm[i]`. The result has
    /// `new.at(perm[a], perm[b]) = perm[old.at(a, b)]`.
    pub fn apply_permutation(&self, perm: &[usize]) -> Result<FiniteMagma> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::LengthMismatch {
                order: n,
                expected: n,
                actual: perm.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n {
                return Err(Error::IndexOutOfRange { index: p, order: n });
            }
            if seen[p] {
                return Err(Error::InvalidSpec("permutation is not a bijection".into()));
            }
            seen[p] = true;
        }
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.at(a, b)];
            }
        }
        let labels = self.labels.as_ref().map(|ls| {
            let mut out = vec![String::new(); n];
            for (i, l) in ls.iter().enumerate() {
                out[perm[i]] = l.clone();
            }
            out
        });
        Ok(FiniteMagma {
            order: n,
            table,
            labels,
            designated_zero: self.designated_zero.map(|z| perm[z]),
        })
    }

    /// Canonical text form: order line, one row per line, optional
    /// `# labels:` trailer. Round-trips bit-exactly through `from_text`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.order);
        for a in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|b| self.at(a, b).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        if let Some(ls) = &self.labels {
            s.push_str(&format!("# labels: {}\n", ls.join(" ")));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<FiniteMagma> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let order: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty table text".into()))?
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad order line: {e}")))?;
        let mut entries = Vec::with_capacity(order * order);
        for _ in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing table row".into()))?;
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))?;
                entries.push(v);
            }
        }
        let labels = match lines.next() {
            None => None,
            Some(line) => {
                let rest = line
                    .trim()
                    .strip_prefix("# labels:")
                    .ok_or_else(|| Error::Parse(format!("unexpected trailing line {line:?}")))?;
                Some(rest.split_whitespace().map(str::to_string).collect())
            }
        };
        FiniteMagma::build_table(order, entries, labels)
    }
}

/// Counterexample to an equational claim: the variable assignment plus the
/// two sides it drives apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub elems: Vec<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Pair,
    Triple,
}

impl Witness {
    pub fn pair(a: usize, b: usize, lhs: usize, rhs: usize) -> Witness {
        Witness {
            kind: WitnessKind::Pair,
            elems: vec![a, b],
            lhs,
            rhs,
        }
    }

    pub fn triple(a: usize, b: usize, c: usize, lhs: usize, rhs: usize) -> Witness {
        Witness {
            kind: WitnessKind::Triple,
            elems: vec![a, b, c],
            lhs,
            rhs,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        write!(
            f,
            "({}): lhs={} rhs={}",
            elems.join(","),
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Debug, Clone)]
pub struct BasicReport {
    pub commutative: bool,
    pub commutative_witness: Option<Witness>,
    pub associative: bool,
    pub associative_witness: Option<Witness>,
    pub left_identities: SubsetMask,
    pub right_identities: SubsetMask,
    pub two_sided_identities: SubsetMask,
    pub idempotents: SubsetMask,
    pub strictly_noncommutative: bool,
}

impl BasicReport {
    /// Idempotent groupoid: `x*x = x` for every carrier element.
    pub fn idempotent_groupoid(&self) -> bool {
        self.idempotents.is_full()
    }

    /// The unique two-sided identity, when present.
    pub fn identity(&self) -> Option<usize> {
        self.two_sided_identities.min_elem()
    }
}

#[derive(Debug, Clone)]
pub struct ZeroDivisorReport {
    pub left: SubsetMask,
    pub right: SubsetMask,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// One mutually-reachable pair: `a_from_b` lists every `(x, side)` with
/// `x*b = a` (left) or `b*x = a` (right), and symmetrically for `b_from_a`.
#[derive(Debug, Clone)]
pub struct ConjugatePair {
    pub a: usize,
    pub b: usize,
    pub a_from_b: Vec<(usize, Side)>,
    pub b_from_a: Vec<(usize, Side)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopReport {
    pub is_loop: bool,
    pub defect: Option<LoopDefect>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopDefect {
    NoIdentity,
    RowRepeat {
        row: usize,
        col_a: usize,
        col_b: usize,
        value: usize,
    },
    ColRepeat {
        col: usize,
        row_a: usize,
        row_b: usize,
        value: usize,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_2_3() -> FiniteMagma {
        // a*b = 2a+3b (mod 4)
        let entries: Vec<usize> = (0..4)
            .flat_map(|a| (0..4).map(move |b| (2 * a + 3 * b) % 4))
            .collect();
        FiniteMagma::build_table(4, entries, None)
            .unwrap()
            .with_designated_zero(Some(0))
            .unwrap()
    }

    #[test]
    fn build_rejects_bad_tables() {
        assert_eq!(
            FiniteMagma::build_table(2, vec![0, 0, 0], None)
                .unwrap_err()
                .code(),
            "LENGTH_MISMATCH"
        );
        assert_eq!(
            FiniteMagma::build_table(2, vec![0, 0, 0, 2], None)
                .unwrap_err()
                .code(),
            "ENTRY_OUT_OF_RANGE"
        );
        assert!(FiniteMagma::build_table(2, vec![0, 0, 0, 1], None).is_ok());
        assert!(FiniteMagma::build_table(1, vec![0], None).is_ok());
    }

    #[test]
    fn product_bounds() {
        let m = z4_2_3();
        assert_eq!(m.product(1, 2).unwrap(), 0);
        assert_eq!(m.product(4, 0).unwrap_err().code(), "INDEX_OUT_OF_RANGE");
    }

    #[test]
    fn basic_report_finds_lex_first_witnesses() {
        let m = z4_2_3();
        let r = m.basic_report();
        assert!(!r.associative);
        let w = r.associative_witness.as_ref().unwrap();
        assert_eq!(w.elems, vec![0, 0, 1]);
        assert_eq!((w.lhs, w.rhs), (3, 1));
        assert!(!r.commutative);
        // t+u = 5 ≡ 1 (mod 4), so every element satisfies a*a = a.
        assert!(r.idempotents.contains(1));
        assert!(r.idempotent_groupoid());
    }

    #[test]
    fn identity_sets() {
        // (Z_3, +): 0 is the unique two-sided identity.
        let add3: Vec<usize> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a + b) % 3))
            .collect();
        let m = FiniteMagma::build_table(3, add3, None).unwrap();
        let r = m.basic_report();
        assert_eq!(r.identity(), Some(0));
        assert!(r.commutative && r.associative);
        assert!(m.is_loop());
    }

    #[test]
    fn loop_defects() {
        // x*y = x has no identity.
        let m = FiniteMagma::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        let lr = m.loop_report();
        assert!(!lr.is_loop);
        assert_eq!(lr.defect, Some(LoopDefect::NoIdentity));

        // Identity present but row 1 repeats.
        let m = FiniteMagma::from_rows(&[vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]]).unwrap();
        let lr = m.loop_report();
        assert!(!lr.is_loop);
        assert!(matches!(lr.defect, Some(LoopDefect::RowRepeat { row: 1, .. })));
    }

    #[test]
    fn center_of_commutative_magma_is_full() {
        let add3: Vec<usize> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a + b) % 3))
            .collect();
        let m = FiniteMagma::build_table(3, add3, None).unwrap();
        assert!(m.center().is_full());
    }

    #[test]
    fn zero_divisors_exclude_zero_itself() {
        // 1*2 = 0 in (Z_3, +): both 1 and 2 get both-sided zero divisors.
        let add3: Vec<usize> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a + b) % 3))
            .collect();
        let m = FiniteMagma::build_table(3, add3, None).unwrap();
        let zd = m.zero_divisor_report(0).unwrap();
        assert_eq!(zd.right.to_vec(), vec![1, 2]);
        assert_eq!(zd.left.to_vec(), vec![1, 2]);
        assert!(m.zero_divisor_report(3).is_err());
    }

    #[test]
    fn direct_product_mixed_radix() {
        let m2 = FiniteMagma::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap(); // C2
        let m3: Vec<usize> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a + b) % 3))
            .collect();
        let m3 = FiniteMagma::build_table(3, m3, None).unwrap();
        let p = FiniteMagma::direct_product(&[&m2, &m3]).unwrap();
        assert_eq!(p.order(), 6);
        // (1,2) * (1,1) = (0,0): indices 1*3+2=5 and 1*3+1=4 multiply to 0.
        assert_eq!(p.at(5, 4), 0);
        assert_eq!(p.label_of(5), "(1,2)");
        let err = FiniteMagma::direct_product_capped(&[&m3, &m3], 5).unwrap_err();
        assert_eq!(err.code(), "PRODUCT_ORDER_OVERFLOW");
    }

    #[test]
    fn isomorphism_brute_force() {
        let m = z4_2_3();
        let id = FiniteMagma::are_isomorphic(&m, &m).unwrap().unwrap();
        assert_eq!(id, vec![0, 1, 2, 3]);
        let perm = vec![2, 0, 3, 1];
        let relabeled = m.apply_permutation(&perm).unwrap();
        let found = FiniteMagma::are_isomorphic(&m, &relabeled).unwrap();
        assert!(found.is_some());
        let mismatch = FiniteMagma::from_rows(&[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(
            FiniteMagma::are_isomorphic(&m, &mismatch).unwrap_err().code(),
            "ORDER_MISMATCH"
        );
    }

    #[test]
    fn permutation_preserves_products() {
        let m = z4_2_3();
        let perm = vec![3, 1, 0, 2];
        let q = m.apply_permutation(&perm).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(q.at(perm[a], perm[b]), perm[m.at(a, b)]);
            }
        }
        assert_eq!(q.designated_zero(), Some(3));
    }

    #[test]
    fn text_round_trip() {
        let m = z4_2_3()
            .with_labels(vec!["0".into(), "1".into(), "2".into(), "3".into()])
            .unwrap();
        let text = m.to_text();
        let back = FiniteMagma::from_text(&text).unwrap();
        assert!(m.same_table(&back));
        assert_eq!(back.labels(), m.labels());
        assert_eq!(back.to_text(), text);
        assert_eq!(
            FiniteMagma::from_text("2\n0 1\n").unwrap_err().code(),
            "PARSE_ERROR"
        );
    }
}
