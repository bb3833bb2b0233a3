//! Catalog of printed claims that the brute-force oracles contradict.
//!
//! Each entry records the claim as printed, what exhaustive computation
//! finds instead, and which verification entries or fixtures it touches.
//! Verification reports cite these ids instead of silently correcting the
//! source material.

/// A registered discrepancy between a printed claim and computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    /// Stable identifier cited by verification reports and fixtures.
    pub id: &'static str,
    /// The claim as printed.
    pub printed_claim: &'static str,
    /// What exhaustive computation finds.
    pub computed_fact: &'static str,
    /// Theorem ids (or fixture names) whose checks carry this erratum.
    pub affected: &'static [&'static str],
}

pub const ERRATA: &[Erratum] = &[
    Erratum {
        id: "2.3.1",
        printed_claim: "Z_12(1,4) is inner-commutative: every subgroupoid of the \
                        partition P1..P4 = {i, i+4, i+8} is commutative",
        computed_fact: "the closed subset {0,3,6,9} of Z_12(1,4) is a left-zero magma \
                        (i*j = i + 4j ≡ i mod 12 on multiples of 3), hence noncommutative; \
                        Z_12(1,4) is not inner-commutative",
        affected: &["ex_2_3_1"],
    },
    Erratum {
        id: "3.4-count",
        printed_claim: "Z***(n) contains n(n-1) groupoids",
        computed_fact: "all pairs (t,u) except (0,0) are admitted, so |Z***(n)| = n^2 - 1; \
                        e.g. 24 members for n = 5, not 20",
        affected: &["3.4.1"],
    },
    Erratum {
        id: "4.2.5",
        printed_claim: "in the order-8 machine of the preceding example, P = {0,2,3,4,6} and \
                        Q = {0,2,4,6} satisfy 7P = Q, making P and Q S-semiconjugate",
        computed_fact: "under Z_8(2,6), 7P = {6 + 6p mod 8 : p in P} = {0,2,6} and \
                        P7 = {2p + 2 mod 8} = {0,2,6}; under the label's Z_8(2,4) \
                        reading, the products are {2,6} and {0,2,4}; no reading gives Q",
        affected: &["4.2.5"],
    },
    Erratum {
        id: "4.2.6-direction",
        printed_claim: "an S-commutative groupoid is always S-inner-commutative (stated \
                        implication runs commutative => inner-commutative)",
        computed_fact: "the accompanying argument derives S-commutativity from \
                        S-inner-commutativity, and a commutative magma with a \
                        noncommutative S-subgroupoid refutes the printed direction; \
                        the implication verified here is inner-commutative => commutative",
        affected: &["4.2.6"],
    },
    Erratum {
        id: "5.1.8",
        printed_claim: "Z_n(t,u) with t + u ≡ 1 (mod n) satisfies the P-identity if and \
                        only if t^2 ≡ t and u^2 ≡ u (mod n)",
        computed_fact: "the P-identity holds iff t^2 - t ≡ u^2 - u (mod n); Z_10(3,8) \
                        satisfies P globally while 3^2 = 9 ≢ 3 (mod 10)",
        affected: &["5.1.8"],
    },
    Erratum {
        id: "5.2.4-count",
        printed_claim: "the only Smarandache groupoids in Z*(8) \\ Z(8) are the six \
                        machines Z_8(2,6), Z_8(4,6), Z_8(6,2), Z_8(6,4), Z_8(3,6) and \
                        Z_8(6,3)",
        computed_fact: "Z*(8) \\ Z(8) has eight members: Z_8(2,4) and Z_8(4,2) also \
                        belong to the difference and are Smarandache via the null \
                        semigroup {0,4} (2*4 + 4*4 ≡ 4*2 + 2*4 ≡ 0 (mod 8)), so every \
                        member of the difference is an SG",
        affected: &["ex_5_2_4"],
    },
    Erratum {
        id: "5.3.4-witness",
        printed_claim: "for even n, Z_n((n+1)/2, (n+1)/2) is an SG",
        computed_fact: "(n+1)/2 is not an integer for even n; the intended machine is \
                        Z_n(n/2, n/2), which is an SG with semigroup {0, n/2} exactly \
                        when (n/2)^2 ≡ 0 (mod n), i.e. n ∈ {4, 8, 12, 16, ...} with 4 | n",
        affected: &["5.3.4"],
    },
    Erratum {
        id: "5.3.6-converse",
        printed_claim: "Z_n(m,m) with m^2 ≡ m (mod n) is an SG only if 2m ≡ 1 (mod n)",
        computed_fact: "the necessity fails: Z_12(6,6) and Z_14(7,7) are SGs with \
                        idempotent m and 2m ≡ 0 (mod n); sufficiency (2m ≡ 1 => SG) holds",
        affected: &["5.3.6"],
    },
    Erratum {
        id: "5.4.5-hypothesis",
        printed_claim: "for p prime with p ∤ n, Z_n(p,0) is an SG with semigroup {0, n/p}",
        computed_fact: "the witness {0, n/p} requires p | n for n/p to be an element; \
                        with p | n the pair {0, n/p} is closed and associative as claimed",
        affected: &["5.4.5", "5.4.6"],
    },
    Erratum {
        id: "5.6.3-degenerate",
        printed_claim: "an adjoined machine Z_n(t,u) ∪ {e} is right alternative iff \
                        t^2 ≡ 1 and tu + u ≡ 0 (mod n) (dually left alternative iff \
                        u^2 ≡ 1 and tu + t ≡ 0)",
        computed_fact: "the equivalence holds when assignments that accidentally collide \
                        with the adjoined identity's absorption rule are excused; on the \
                        full domain the law also fails at collisions such as x*y = x \
                        forcing (x*y)*y = e, e.g. (x,y) = (1,3) in Z_6(4,5) ∪ {e}",
        affected: &["5.6.3", "5.6.4"],
    },
    Erratum {
        id: "5.6.5-converse",
        printed_claim: "an adjoined machine Z_n(t,u) ∪ {e} satisfies Bol, Moufang, and \
                        P-identities iff t^2 ≡ t and u^2 ≡ u (mod n)",
        computed_fact: "sufficiency holds on non-degenerate assignments, but the converse \
                        fails: Z_4(2,3) ∪ {e} satisfies all three identities on every \
                        non-degenerate assignment while t^2 = 0 ≢ 2 (mod 4)",
        affected: &["5.6.5"],
    },
    Erratum {
        id: "6.2.1-substates",
        printed_claim: "the state set {0,2} of the order-4 machine built from Z_4(2,1) \
                        is closed under all inputs",
        computed_fact: "δ(0,a) = a mod 4 under Z_4(2,1), so odd letters leave {0,2}; \
                        no proper nonempty state set of this machine is closed",
        affected: &["ex_6_2_1"],
    },
    Erratum {
        id: "6.2.2-table",
        printed_claim: "the transition table printed for the machine built from Z_3(1,2) \
                        on a 4-letter alphabet has rows 1 and 2 equal to [2,1,0,2] and \
                        [1,0,2,1]",
        computed_fact: "δ(z,a) = z + 2a (mod 3) gives rows [1,0,2,1] and [2,1,0,2]; the \
                        printed rows correspond to coefficients (2,2) instead of (1,2)",
        affected: &["ex_6_2_2"],
    },
    Erratum {
        id: "6.2.5-table",
        printed_claim: "the order-3 machine on a 6-letter alphabet stated to use \
                        coefficients (3,2) ≡ (0,2) has the printed transition table",
        computed_fact: "the printed δ equals the (3,3)-coefficient table, not (0,2); \
                        λ matches the stated output machine on letters 0..4; under \
                        either reading the machine has no proper nonempty closed \
                        state set",
        affected: &["ex_6_2_5"],
    },
];

/// Look up a registered erratum by id.
pub fn erratum(id: &str) -> Option<&'static Erratum> {
    ERRATA.iter().find(|e| e.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_sorted_lookup_works() {
        for (i, e) in ERRATA.iter().enumerate() {
            for other in &ERRATA[i + 1..] {
                assert_ne!(e.id, other.id, "duplicate erratum id");
            }
            assert_eq!(erratum(e.id).unwrap().id, e.id);
        }
        assert!(erratum("no-such-id").is_none());
    }

    #[test]
    fn registry_has_expected_size() {
        assert_eq!(ERRATA.len(), 14);
    }

    #[test]
    fn every_entry_is_fully_populated() {
        for e in ERRATA {
            assert!(!e.printed_claim.is_empty());
            assert!(!e.computed_fact.is_empty());
            assert!(!e.affected.is_empty());
        }
    }
}
