use crate::error::{Error, Result};
use crate::magma::FiniteMagma;
use num_integer::Integer;
use std::fmt;
use std::str::FromStr;

/// Parameters for a modular groupoid `Z_n(t,u)`: the magma on residues
/// `0..n` with `a*b = ta + ub (mod n)`, optionally extended by a fresh
/// two-sided identity `e` that also absorbs every self-product (`a*a = e`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZnSpec {
    pub n: usize,
    pub t: usize,
    pub u: usize,
    pub adjoin_identity: bool,
}

impl ZnSpec {
    pub fn new(n: usize, t: usize, u: usize, adjoin_identity: bool) -> Result<ZnSpec> {
        if n < 3 {
            return Err(Error::InvalidSpec(format!("modulus must be at least 3, got {n}")));
        }
        if t >= n || u >= n {
            return Err(Error::InvalidSpec(format!(
                "coefficients must be residues mod {n}, got t={t}, u={u}"
            )));
        }
        if t == 0 && u == 0 {
            return Err(Error::InvalidSpec("t and u cannot both be zero".into()));
        }
        Ok(ZnSpec {
            n,
            t,
            u,
            adjoin_identity,
        })
    }

    /// Smallest class of the chain Z ⊂ Z* ⊂ Z** ⊂ Z*** containing (t,u).
    pub fn class(&self) -> ClassTag {
        classify_pair(self.n, self.t, self.u)
    }

    pub fn predicted(&self) -> PredictedFlags {
        predicted_flags(self.n, self.t, self.u, self.adjoin_identity)
    }

    pub fn build(&self) -> FiniteMagma {
        build_zn(self)
    }
}

impl fmt::Display for ZnSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.n, self.t, self.u)?;
        if self.adjoin_identity {
            write!(f, "+e")?;
        }
        Ok(())
    }
}

impl FromStr for ZnSpec {
    type Err = Error;

    /// Accepts `n:t:u` or `n:t:u+e`.
    fn from_str(s: &str) -> Result<ZnSpec> {
        let (body, adjoin) = match s.strip_suffix("+e") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let parts: Vec<&str> = body.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidSpec(format!(
                "expected n:t:u or n:t:u+e, got {s:?}"
            )));
        }
        let mut nums = [0usize; 3];
        for (slot, part) in nums.iter_mut().zip(&parts) {
            *slot = part
                .trim()
                .parse()
                .map_err(|e| Error::InvalidSpec(format!("bad number {part:?} in {s:?}: {e}")))?;
        }
        ZnSpec::new(nums[0], nums[1], nums[2], adjoin)
    }
}

/// The four nested coefficient classes. Each tag admits every pair its
/// predecessors admit; `classify_pair` reports the smallest tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    /// t, u nonzero, distinct, gcd(t,u) = 1.
    Z,
    /// t, u nonzero, distinct.
    ZStar,
    /// t, u nonzero.
    ZStarStar,
    /// any pair except (0,0).
    ZStarStarStar,
    /// (0,0) only.
    None,
}

pub const CLASS_TAGS: [ClassTag; 4] = [
    ClassTag::Z,
    ClassTag::ZStar,
    ClassTag::ZStarStar,
    ClassTag::ZStarStarStar,
];

impl ClassTag {
    pub fn cli_name(self) -> &'static str {
        match self {
            ClassTag::Z => "z",
            ClassTag::ZStar => "zs",
            ClassTag::ZStarStar => "zss",
            ClassTag::ZStarStarStar => "zsss",
            ClassTag::None => "none",
        }
    }

    pub fn parse_cli(name: &str) -> Result<ClassTag> {
        CLASS_TAGS
            .iter()
            .copied()
            .find(|c| c.cli_name() == name)
            .ok_or_else(|| Error::Parse(format!("unknown class {name:?}")))
    }

    /// Inclusive membership test for the coefficient pair.
    pub fn admits(self, t: usize, u: usize) -> bool {
        match self {
            ClassTag::Z => t >= 1 && u >= 1 && t != u && t.gcd(&u) == 1,
            ClassTag::ZStar => t >= 1 && u >= 1 && t != u,
            ClassTag::ZStarStar => t >= 1 && u >= 1,
            ClassTag::ZStarStarStar => (t, u) != (0, 0),
            ClassTag::None => false,
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Z => write!(f, "Z"),
            ClassTag::ZStar => write!(f, "Z*"),
            ClassTag::ZStarStar => write!(f, "Z**"),
            ClassTag::ZStarStarStar => write!(f, "Z***"),
            ClassTag::None => write!(f, "none"),
        }
    }
}

/// Smallest tag of the nested chain admitting (t,u); `None` for (0,0).
pub fn classify_pair(n: usize, t: usize, u: usize) -> ClassTag {
    debug_assert!(t < n && u < n);
    CLASS_TAGS
        .iter()
        .copied()
        .find(|c| c.admits(t, u))
        .unwrap_or(ClassTag::None)
}

/// All pairs the tag admits, sorted by t then u.
pub fn enumerate_class(n: usize, tag: ClassTag) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for t in 0..n {
        for u in 0..n {
            if tag.admits(t, u) {
                out.push((t, u));
            }
        }
    }
    out
}

/// Class cardinality. Z*(n) has (n−1)(n−2) members, Z**(n) has (n−1)², and
/// Z***(n) has n²−1; Z(n) has no closed form and is counted directly.
pub fn class_size(n: usize, tag: ClassTag) -> usize {
    match tag {
        ClassTag::Z => enumerate_class(n, tag).len(),
        ClassTag::ZStar => (n - 1) * (n - 2),
        ClassTag::ZStarStar => (n - 1) * (n - 1),
        ClassTag::ZStarStarStar => n * n - 1,
        ClassTag::None => 0,
    }
}

/// Builds the Cayley table for the spec. The plain variant lives on
/// `0..n` with `a*b = ta+ub (mod n)` and designated zero 0. The adjoined
/// variant appends `e` at index n with `a*a = e`, `a*e = e*a = a`,
/// `e*e = e`, and the modular rule for distinct residues.
pub fn build_zn(spec: &ZnSpec) -> FiniteMagma {
    let ZnSpec {
        n,
        t,
        u,
        adjoin_identity,
    } = *spec;
    if !adjoin_identity {
        let entries: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (t * a + u * b) % n))
            .collect();
        return FiniteMagma::build_table(n, entries, None)
            .and_then(|m| m.with_designated_zero(Some(0)))
            .expect("validated spec builds");
    }
    let order = n + 1;
    let e = n;
    let mut entries = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            let v = if a == e && b == e {
                e
            } else if a == e {
                b
            } else if b == e {
                a
            } else if a == b {
                e
            } else {
                (t * a + u * b) % n
            };
            entries.push(v);
        }
    }
    let mut labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    labels.push("e".to_string());
    FiniteMagma::build_table(order, entries, Some(labels))
        .and_then(|m| m.with_designated_zero(Some(0)))
        .expect("validated spec builds")
}

/// Loop of order n+1 on carrier {1,..,n} ∪ {e}: distinct values multiply by
/// `a*b = mb − (m−1)a (mod n)` with representative range 1..n, every
/// self-product gives e, and e is the identity. Requires n odd, n > 3,
/// 1 ≤ m < n, gcd(m,n) = gcd(m−1,n) = 1 (which makes the table a Latin
/// square). Value k sits at index k−1; e sits at index n.
pub fn build_loop(n: usize, m: usize) -> Result<FiniteMagma> {
    if n <= 3 {
        return Err(Error::InvalidLoopParams(format!("n must exceed 3, got {n}")));
    }
    if n.is_multiple_of(2) {
        return Err(Error::InvalidLoopParams(format!("n must be odd, got {n}")));
    }
    if m < 1 || m >= n {
        return Err(Error::InvalidLoopParams(format!(
            "m must lie in 1..{n}, got {m}"
        )));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::InvalidLoopParams(format!(
            "gcd(m, n) must be 1, got gcd({m}, {n}) = {}",
            m.gcd(&n)
        )));
    }
    if (m - 1).gcd(&n) != 1 {
        return Err(Error::InvalidLoopParams(format!(
            "gcd(m-1, n) must be 1, got gcd({}, {n}) = {}",
            m - 1,
            (m - 1).gcd(&n)
        )));
    }
    let order = n + 1;
    let e = n;
    let mut entries = Vec::with_capacity(order * order);
    for i in 0..order {
        for j in 0..order {
            let v = if i == e && j == e {
                e
            } else if i == e {
                j
            } else if j == e {
                i
            } else if i == j {
                e
            } else {
                let a = (i + 1) as i64;
                let b = (j + 1) as i64;
                let raw = (m as i64) * b - (m as i64 - 1) * a;
                let mut val = raw.rem_euclid(n as i64) as usize;
                if val == 0 {
                    val = n;
                }
                val - 1
            };
            entries.push(v);
        }
    }
    let mut labels: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    labels.push("e".to_string());
    FiniteMagma::build_table(order, entries, Some(labels))
}

/// The congruence values that decide each predicted flag, kept for audit.
/// All values are reduced mod n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residues {
    pub t2: usize,
    pub u2: usize,
    pub t3: usize,
    pub t_plus_u: usize,
    /// t² − t: the x-coefficient of the associator and both alternative gaps.
    pub p_left: usize,
    /// u² − u: the z-coefficient of the associator.
    pub p_right: usize,
    /// tu(1−t): the y-coefficient of the Moufang gap.
    pub moufang_y: usize,
    /// tu(1−u): the z-coefficient of the Moufang and Bol gaps.
    pub moufang_z: usize,
    /// tu + u: must vanish for the adjoined right-alternative law.
    pub ralt_shift: usize,
    /// t + tu: must vanish for the adjoined left-alternative law.
    pub lalt_shift: usize,
}

/// Law predictions for Z_n(t,u) computed purely from coefficient
/// congruences. Expanding each law's two sides over the linear operation
/// leaves a gap that is itself linear in the variables, so a law holds on
/// the whole carrier exactly when every gap coefficient vanishes mod n:
///
/// - associativity gap: (t²−t)x + (u−u²)z
/// - left/right alternative gap: (t²−t)x + (u−u²)y
/// - P gap: ((t²−t) − (u²−u))x
/// - Bol gap: (t³−t)x + (u−u²)y + tu(1−u)z
/// - Moufang gap: (u²−u)x + tu(1−t)y + tu(1−u)z
///
/// The adjoined flags predict the non-degenerate alternative laws in the
/// identity-adjoined magma, where `(x*y)*y = x*(y*y)` collapses to
/// `t²x + (tu+u)y = x` and its mirror to `u²y + (t+tu)x = y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredictedFlags {
    pub adjoined: bool,
    pub semigroup: bool,
    pub idempotent_groupoid: bool,
    pub strong_p: bool,
    pub strong_alternative: bool,
    pub strong_bol: bool,
    pub strong_moufang: bool,
    pub adjoined_right_alt: bool,
    pub adjoined_left_alt: bool,
    pub residues: Residues,
}

pub fn predicted_flags(n: usize, t: usize, u: usize, adjoined: bool) -> PredictedFlags {
    let (ni, ti, ui) = (n as i64, t as i64, u as i64);
    let md = |x: i64| x.rem_euclid(ni) as usize;
    let residues = Residues {
        t2: md(ti * ti),
        u2: md(ui * ui),
        t3: md(ti * ti * ti),
        t_plus_u: md(ti + ui),
        p_left: md(ti * ti - ti),
        p_right: md(ui * ui - ui),
        moufang_y: md(ti * ui * (1 - ti)),
        moufang_z: md(ti * ui * (1 - ui)),
        ralt_shift: md(ti * ui + ui),
        lalt_shift: md(ti + ti * ui),
    };
    let t_fixed = residues.t2 == t;
    let u_fixed = residues.u2 == u;
    PredictedFlags {
        adjoined,
        semigroup: t_fixed && u_fixed,
        idempotent_groupoid: residues.t_plus_u == 1,
        strong_p: residues.p_left == residues.p_right,
        strong_alternative: t_fixed && u_fixed,
        strong_bol: residues.t3 == t && u_fixed,
        strong_moufang: u_fixed && residues.moufang_y == 0 && residues.moufang_z == 0,
        // At (t,u) = (0,1) the inner product x*y equals y on every
        // assignment, so no non-degenerate right-alternative instance
        // exists and the check passes vacuously; (1,0) mirrors this for the
        // left law.
        adjoined_right_alt: (residues.t2 == 1 && residues.ralt_shift == 0)
            || (t == 0 && u == 1),
        adjoined_left_alt: (residues.u2 == 1 && residues.lalt_shift == 0)
            || (t == 1 && u == 0),
        residues,
    }
}
