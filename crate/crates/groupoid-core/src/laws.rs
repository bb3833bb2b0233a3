use crate::error::{Error, Result};
use crate::magma::{FiniteMagma, Witness};
use std::fmt;

/// The weak associativity-flavored identities this crate checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LawId {
    Moufang,
    Bol,
    P,
    LeftAlternative,
    RightAlternative,
    Alternative,
}

pub const ALL_LAWS: [LawId; 6] = [
    LawId::Moufang,
    LawId::Bol,
    LawId::P,
    LawId::LeftAlternative,
    LawId::RightAlternative,
    LawId::Alternative,
];

impl LawId {
    pub fn cli_name(self) -> &'static str {
        match self {
            LawId::Moufang => "moufang",
            LawId::Bol => "bol",
            LawId::P => "p",
            LawId::LeftAlternative => "lalt",
            LawId::RightAlternative => "ralt",
            LawId::Alternative => "alt",
        }
    }

    pub fn parse_cli(name: &str) -> Result<LawId> {
        ALL_LAWS
            .iter()
            .copied()
            .find(|l| l.cli_name() == name)
            .ok_or_else(|| Error::Parse(format!("unknown law {name:?}")))
    }

    /// Number of distinct variables in the identity.
    pub fn arity(self) -> usize {
        match self {
            LawId::Moufang | LawId::Bol => 3,
            _ => 2,
        }
    }

    /// Human-readable equation with variables x, y, z.
    pub fn equation(self) -> String {
        match self {
            LawId::Alternative => format!(
                "{} and {}",
                LawId::LeftAlternative.equation(),
                LawId::RightAlternative.equation()
            ),
            _ => {
                let (lhs, rhs) = self.sides();
                format!("{lhs} = {rhs}")
            }
        }
    }

    /// Syntax trees for both sides. `Alternative` is a conjunction of two
    /// equations and has no single pair of sides.
    pub fn sides(self) -> (Expr, Expr) {
        use Expr::Var;
        let m = |a: Expr, b: Expr| Expr::Mul(Box::new(a), Box::new(b));
        match self {
            // (x*y)*(z*x) = (x*(y*z))*x
            LawId::Moufang => (
                m(m(Var(0), Var(1)), m(Var(2), Var(0))),
                m(m(Var(0), m(Var(1), Var(2))), Var(0)),
            ),
            // ((x*y)*z)*y = x*((y*z)*y)
            LawId::Bol => (
                m(m(m(Var(0), Var(1)), Var(2)), Var(1)),
                m(Var(0), m(m(Var(1), Var(2)), Var(1))),
            ),
            // (x*y)*x = x*(y*x)
            LawId::P => (
                m(m(Var(0), Var(1)), Var(0)),
                m(Var(0), m(Var(1), Var(0))),
            ),
            // (x*x)*y = x*(x*y)
            LawId::LeftAlternative => (
                m(m(Var(0), Var(0)), Var(1)),
                m(Var(0), m(Var(0), Var(1))),
            ),
            // (x*y)*y = x*(y*y)
            LawId::RightAlternative => (
                m(m(Var(0), Var(1)), Var(1)),
                m(Var(0), m(Var(1), Var(1))),
            ),
            LawId::Alternative => panic!("Alternative has no single equation"),
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cli_name())
    }
}

/// Word in the free magma over variables 0..arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(u8),
    Mul(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Evaluates under `assignment` and reports whether any product node that
    /// is not written as a literal self-product (`w*w` with identical
    /// subtrees) ended up multiplying two equal values. In a magma where
    /// `a*a` collapses to an adjoined identity, such accidental collisions
    /// destroy the information the law is meant to test.
    fn eval_tracking(&self, m: &FiniteMagma, assignment: &[usize]) -> (usize, bool) {
        match self {
            Expr::Var(i) => (assignment[*i as usize], false),
            Expr::Mul(a, b) => {
                let (va, da) = a.eval_tracking(m, assignment);
                let (vb, db) = b.eval_tracking(m, assignment);
                let syntactic_square = matches!((&**a, &**b), (Expr::Var(i), Expr::Var(j)) if i == j);
                let accidental = va == vb && !syntactic_square;
                (m.at(va, vb), da || db || accidental)
            }
        }
    }

    pub fn eval(&self, m: &FiniteMagma, assignment: &[usize]) -> usize {
        self.eval_tracking(m, assignment).0
    }

    fn max_var(&self) -> u8 {
        match self {
            Expr::Var(i) => *i,
            Expr::Mul(a, b) => a.max_var().max(b.max_var()),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(i) => write!(f, "{}", (b'x' + i) as char),
            Expr::Mul(a, b) => {
                let wrap = |e: &Expr, f: &mut fmt::Formatter<'_>| match e {
                    Expr::Var(_) => write!(f, "{e}"),
                    Expr::Mul(..) => write!(f, "({e})"),
                };
                wrap(a, f)?;
                write!(f, "*")?;
                wrap(b, f)
            }
        }
    }
}

/// Which assignments a law check ranged over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawDomain {
    /// Every tuple of carrier elements.
    Full,
    /// Tuples are skipped when a variable is bound to the unique two-sided
    /// identity, or when evaluation hits an accidental equal-operand product
    /// (see `Expr::eval_tracking`).
    NonDegenerate,
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub law: LawId,
    pub domain: LawDomain,
    pub holds: bool,
    /// Lexicographically first failing assignment inside the domain.
    pub witness: Option<Witness>,
    /// For `Alternative`, which component produced the witness.
    pub witness_law: Option<LawId>,
    /// Assignments actually vouched for (degenerate ones are not counted).
    pub checked: usize,
    /// Failing assignments that were excused as degenerate.
    pub degenerate_witnesses: usize,
}

/// Checks `law` over the whole carrier.
pub fn check_law(m: &FiniteMagma, law: LawId, skip_degenerate: bool) -> LawReport {
    let elems: Vec<usize> = m.elements().collect();
    check_law_on(m, law, &elems, skip_degenerate)
}

/// Checks `law` with variables ranging over `elems` only (products are still
/// taken in the ambient magma). Used for law checks inside substructures.
pub fn check_law_on(
    m: &FiniteMagma,
    law: LawId,
    elems: &[usize],
    skip_degenerate: bool,
) -> LawReport {
    if law == LawId::Alternative {
        let left = check_law_on(m, LawId::LeftAlternative, elems, skip_degenerate);
        let right = check_law_on(m, LawId::RightAlternative, elems, skip_degenerate);
        // Prefer the lexicographically smaller witness assignment; ties go to
        // the left-alternative component.
        let (witness, witness_law) = match (&left.witness, &right.witness) {
            (Some(_), None) => (left.witness.clone(), Some(LawId::LeftAlternative)),
            (None, Some(_)) => (right.witness.clone(), Some(LawId::RightAlternative)),
            (Some(lw), Some(rw)) => {
                if rw.elems < lw.elems {
                    (right.witness.clone(), Some(LawId::RightAlternative))
                } else {
                    (left.witness.clone(), Some(LawId::LeftAlternative))
                }
            }
            (None, None) => (None, None),
        };
        return LawReport {
            law,
            domain: left.domain,
            holds: left.holds && right.holds,
            witness,
            witness_law,
            checked: left.checked + right.checked,
            degenerate_witnesses: left.degenerate_witnesses + right.degenerate_witnesses,
        };
    }

    let (lhs, rhs) = law.sides();
    let arity = law.arity();
    debug_assert_eq!(lhs.max_var().max(rhs.max_var()) as usize + 1, arity);
    if elems.is_empty() {
        return LawReport {
            law,
            domain: if skip_degenerate {
                LawDomain::NonDegenerate
            } else {
                LawDomain::Full
            },
            holds: true,
            witness: None,
            witness_law: None,
            checked: 0,
            degenerate_witnesses: 0,
        };
    }
    let identity = if skip_degenerate {
        m.basic_report().identity()
    } else {
        None
    };
    let mut assignment = vec![elems[0]; arity];
    let mut checked = 0usize;
    let mut degenerate_witnesses = 0usize;
    let mut witness: Option<Witness> = None;
    let mut holds = true;
    let mut done = false;
    while !done {
        let binds_identity = skip_degenerate
            && identity.is_some_and(|e| assignment.contains(&e));
        if !binds_identity {
            let (lv, ld) = lhs.eval_tracking(m, &assignment);
            let (rv, rd) = rhs.eval_tracking(m, &assignment);
            let degenerate = skip_degenerate && (ld || rd);
            if degenerate {
                if lv != rv {
                    degenerate_witnesses += 1;
                }
            } else {
                checked += 1;
                if lv != rv && holds {
                    holds = false;
                    witness = Some(match arity {
                        2 => Witness::pair(assignment[0], assignment[1], lv, rv),
                        _ => Witness::triple(
                            assignment[0],
                            assignment[1],
                            assignment[2],
                            lv,
                            rv,
                        ),
                    });
                }
            }
        }
        // Advance odometer over elems^arity, last variable fastest.
        done = true;
        for slot in (0..arity).rev() {
            let pos = elems.iter().position(|&e| e == assignment[slot]).unwrap();
            if pos + 1 < elems.len() {
                assignment[slot] = elems[pos + 1];
                done = false;
                break;
            }
            assignment[slot] = elems[0];
        }
    }
    LawReport {
        law,
        domain: if skip_degenerate {
            LawDomain::NonDegenerate
        } else {
            LawDomain::Full
        },
        holds,
        witness,
        witness_law: None,
        checked,
        degenerate_witnesses,
    }
}

/// Replays one assignment and returns `(lhs, rhs)` values.
pub fn eval_sides(m: &FiniteMagma, law: LawId, assignment: &[usize]) -> Result<(usize, usize)> {
    if law == LawId::Alternative {
        return Err(Error::InvalidSpec(
            "alternative law is a conjunction; replay lalt or ralt".into(),
        ));
    }
    if assignment.len() != law.arity() {
        return Err(Error::LengthMismatch {
            order: m.order(),
            expected: law.arity(),
            actual: assignment.len(),
        });
    }
    for &v in assignment {
        if v >= m.order() {
            return Err(Error::IndexOutOfRange {
                index: v,
                order: m.order(),
            });
        }
    }
    let (lhs, rhs) = law.sides();
    Ok((lhs.eval(m, assignment), rhs.eval(m, assignment)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_tu(n: usize, t: usize, u: usize) -> FiniteMagma {
        let entries: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (t * a + u * b) % n))
            .collect();
        FiniteMagma::build_table(n, entries, None).unwrap()
    }

    #[test]
    fn law_equations_render() {
        assert_eq!(LawId::Moufang.equation(), "(x*y)*(z*x) = (x*(y*z))*x");
        assert_eq!(LawId::Bol.equation(), "((x*y)*z)*y = x*((y*z)*y)");
        assert_eq!(LawId::P.equation(), "(x*y)*x = x*(y*x)");
        assert_eq!(LawId::LeftAlternative.equation(), "(x*x)*y = x*(x*y)");
        assert_eq!(LawId::RightAlternative.equation(), "(x*y)*y = x*(y*y)");
    }

    #[test]
    fn cli_round_trip() {
        for law in ALL_LAWS {
            assert_eq!(LawId::parse_cli(law.cli_name()).unwrap(), law);
        }
        assert_eq!(LawId::parse_cli("nope").unwrap_err().code(), "PARSE_ERROR");
    }

    #[test]
    fn group_satisfies_everything() {
        let add5 = zn_tu(5, 1, 1);
        for law in ALL_LAWS {
            let r = check_law(&add5, law, false);
            assert!(r.holds, "{law} should hold in (Z5,+)");
            assert!(r.witness.is_none());
        }
        let moufang = check_law(&add5, LawId::Moufang, false);
        assert_eq!(moufang.checked, 125);
        let alt = check_law(&add5, LawId::Alternative, false);
        assert_eq!(alt.checked, 50);
    }

    #[test]
    fn modular_coefficients_decide_laws() {
        // a*b = 2a+3b (mod 4): P holds (t²−t ≡ u²−u ≡ 2), the rest fail.
        let m = zn_tu(4, 2, 3);
        assert!(check_law(&m, LawId::P, false).holds);
        assert!(!check_law(&m, LawId::Moufang, false).holds);
        assert!(!check_law(&m, LawId::Bol, false).holds);
        assert!(!check_law(&m, LawId::LeftAlternative, false).holds);
        assert!(!check_law(&m, LawId::RightAlternative, false).holds);
        assert!(!check_law(&m, LawId::Alternative, false).holds);

        // a*b = 3a+3b (mod 6): t² = 9 ≡ 3 and u² ≡ 3, so both alternative
        // laws hold; t³ = 27 ≡ 3 gives Bol as well.
        let m = zn_tu(6, 3, 3);
        assert!(check_law(&m, LawId::Alternative, false).holds);
        assert!(check_law(&m, LawId::Bol, false).holds);
    }

    #[test]
    fn witness_is_lex_first_and_replays() {
        let m = zn_tu(4, 2, 3);
        let r = check_law(&m, LawId::RightAlternative, false);
        assert!(!r.holds);
        let w = r.witness.unwrap();
        // (x*y)*y − x*(y*y) = (t²−t)x + (u−u²)y = 2x + 2y (mod 4): the first
        // failing assignment is x=0, y=1.
        assert_eq!(w.elems, vec![0, 1]);
        let (lhs, rhs) = eval_sides(&m, LawId::RightAlternative, &w.elems).unwrap();
        assert_eq!((lhs, rhs), (w.lhs, w.rhs));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn merged_alternative_prefers_lex_least_witness() {
        let m = zn_tu(4, 2, 3);
        let r = check_law(&m, LawId::Alternative, false);
        assert!(!r.holds);
        assert_eq!(r.witness.as_ref().unwrap().elems, vec![0, 1]);
        assert_eq!(r.witness_law, Some(LawId::LeftAlternative));
        assert_eq!(r.checked, 32);
    }

    #[test]
    fn degenerate_assignments_are_excused() {
        // {0, 1, e=2} with a*a = e, e the identity, and 0*1 = 1, 1*0 = 0.
        let m = FiniteMagma::from_rows(&[vec![2, 1, 0], vec![0, 2, 1], vec![0, 1, 2]]).unwrap();
        let full = check_law(&m, LawId::RightAlternative, false);
        assert!(!full.holds);
        assert_eq!(full.witness.as_ref().unwrap().elems, vec![0, 1]);

        // Every failure multiplies accidentally equal values, so the
        // non-degenerate check passes vacuously.
        let skim = check_law(&m, LawId::RightAlternative, true);
        assert!(skim.holds);
        assert_eq!(skim.domain, LawDomain::NonDegenerate);
        assert_eq!(skim.checked, 0);
        assert_eq!(skim.degenerate_witnesses, 2);
        assert!(skim.witness.is_none());
    }

    #[test]
    fn subset_law_check_ranges_over_subset_only() {
        let m = zn_tu(4, 2, 3);
        // {0, 2} is closed: 2a+3b stays even. On it, every law holds since
        // products of evens mod 4 land in {0, 2} linearly.
        let r = check_law_on(&m, LawId::Bol, &[0, 2], false);
        assert_eq!(r.checked, 8);
        assert!(r.holds);
    }
}
