//! Census of the modular groupoid classes: one record per machine, with
//! observed properties, coefficient-congruence predictions, and agreement
//! columns wherever a prediction applies.

use crate::error::{Error, Result};
use groupoid_core::{
    check_law, enumerate_class, enumerate_closed, enumerate_ideals, enumerate_subsemigroups,
    s_idempotent, s_inner_commutative, s_law_over, s_subgroupoids, smarandache_witness,
    ClassTag, IdealSide, LawId, SLawStrength, SPolicy, ZnSpec,
};
use serde::Serialize;
use std::io::Write;

/// Largest modulus a census accepts by default; the CLI lets the
/// `MAGMA_MAX_ORDER` environment variable raise or lower it.
pub const DEFAULT_MODULUS_BOUND: usize = 16;

/// Marker written to CSV cells whose computation was skipped because the
/// machine is too large for a complete subset sweep.
pub const NOT_COMPUTED: &str = "not computed";

/// One census row. Optional fields are `None` when the machine exceeds the
/// subset-enumeration bound and the column degrades instead of failing the
/// whole row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub n: usize,
    pub t: usize,
    pub u: usize,
    pub adjoined: bool,
    /// Smallest class tag admitting (t,u): `Z`, `Z*`, `Z**`, or `Z***`.
    pub class: String,
    pub order: usize,
    pub commutative: bool,
    pub associative: bool,
    pub idempotent_groupoid: bool,
    pub strictly_noncommutative: bool,
    pub left_identity_count: usize,
    pub right_identity_count: usize,
    pub moufang: bool,
    pub bol: bool,
    pub p: bool,
    pub lalt: bool,
    pub ralt: bool,
    pub alt: bool,
    pub sg: Option<bool>,
    /// Smarandache and associative outright (the containment is not proper
    /// in spirit: the whole machine is already a semigroup).
    pub degenerate_sg: Option<bool>,
    pub sg_witness: Option<String>,
    pub s_commutative: Option<bool>,
    pub s_inner_comm: Option<bool>,
    pub s_moufang_weak: Option<bool>,
    pub s_moufang_strong: Option<bool>,
    pub s_bol_weak: Option<bool>,
    pub s_bol_strong: Option<bool>,
    pub s_p_weak: Option<bool>,
    pub s_p_strong: Option<bool>,
    pub s_alt_weak: Option<bool>,
    pub s_alt_strong: Option<bool>,
    pub s_idempotent: Option<bool>,
    /// Proper nonempty closed subsets.
    pub closed_count: Option<usize>,
    /// Closed associative subsets other than the designated zero singleton.
    pub subsemigroup_count: Option<usize>,
    pub left_ideal_count: Option<usize>,
    pub right_ideal_count: Option<usize>,
    pub s_subgroupoid_count: Option<usize>,
    pub pred_semigroup: bool,
    pub pred_idempotent: bool,
    pub pred_p: bool,
    pub pred_alt: bool,
    pub pred_bol: bool,
    pub pred_moufang: bool,
    pub pred_adj_ralt: bool,
    pub pred_adj_lalt: bool,
    pub agree_semigroup: Option<bool>,
    pub agree_idempotent: Option<bool>,
    pub agree_p: Option<bool>,
    pub agree_alt: Option<bool>,
    pub agree_bol: Option<bool>,
    pub agree_moufang: Option<bool>,
    pub agree_adj_ralt: Option<bool>,
    pub agree_adj_lalt: Option<bool>,
}

/// CSV header, in the exact field order of `CensusRecord`.
pub const CSV_COLUMNS: [&str; 52] = [
    "n",
    "t",
    "u",
    "adjoined",
    "class",
    "order",
    "commutative",
    "associative",
    "idempotent_groupoid",
    "strictly_noncommutative",
    "left_identity_count",
    "right_identity_count",
    "moufang",
    "bol",
    "p",
    "lalt",
    "ralt",
    "alt",
    "sg",
    "degenerate_sg",
    "sg_witness",
    "s_commutative",
    "s_inner_comm",
    "s_moufang_weak",
    "s_moufang_strong",
    "s_bol_weak",
    "s_bol_strong",
    "s_p_weak",
    "s_p_strong",
    "s_alt_weak",
    "s_alt_strong",
    "s_idempotent",
    "closed_count",
    "subsemigroup_count",
    "left_ideal_count",
    "right_ideal_count",
    "s_subgroupoid_count",
    "pred_semigroup",
    "pred_idempotent",
    "pred_p",
    "pred_alt",
    "pred_bol",
    "pred_moufang",
    "pred_adj_ralt",
    "pred_adj_lalt",
    "agree_semigroup",
    "agree_idempotent",
    "agree_p",
    "agree_alt",
    "agree_bol",
    "agree_moufang",
    "agree_adj_ralt",
    "agree_adj_lalt",
];

/// Maps an order-bound refusal from the core to a degraded column; every
/// other error is a genuine failure.
fn degrade<T>(r: groupoid_core::Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(groupoid_core::Error::OrderTooLarge { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Computes the full census row for one machine.
pub fn census_record(spec: &ZnSpec) -> Result<CensusRecord> {
    let m = spec.build();
    let pred = spec.predicted();
    let basic = m.basic_report();
    let policy = SPolicy::default();
    // Adjoined machines are judged on non-degenerate assignments (their
    // identity-absorption row makes every law fail trivially otherwise);
    // plain machines on the full domain.
    let skip = spec.adjoin_identity;
    let law = |id: LawId| check_law(&m, id, skip).holds;
    let moufang = law(LawId::Moufang);
    let bol = law(LawId::Bol);
    let p = law(LawId::P);
    let lalt = law(LawId::LeftAlternative);
    let ralt = law(LawId::RightAlternative);
    let alt = law(LawId::Alternative);

    let witness = degrade(smarandache_witness(&m, policy))?;
    let (sg, sg_witness) = match witness {
        None => (None, None),
        Some(None) => (Some(false), None),
        Some(Some(w)) => (Some(true), Some(w.subset.to_string())),
    };
    let degenerate_sg = sg.map(|s| s && basic.associative);

    let subs = degrade(s_subgroupoids(&m, policy))?;
    let (s_subgroupoid_count, s_laws) = match &subs {
        None => (None, [None; 8]),
        Some(family) => {
            let members = &family.members;
            let mut verdicts = [None; 8];
            for (i, id) in [LawId::Moufang, LawId::Bol, LawId::P, LawId::Alternative]
                .into_iter()
                .enumerate()
            {
                verdicts[2 * i] =
                    Some(s_law_over(&m, id, SLawStrength::Weak, members).holds);
                verdicts[2 * i + 1] =
                    Some(s_law_over(&m, id, SLawStrength::Strong, members).holds);
            }
            (Some(members.len()), verdicts)
        }
    };

    let closed_count = degrade(enumerate_closed(&m))?.map(|f| {
        f.members
            .iter()
            .filter(|s| !s.is_empty() && !s.is_full())
            .count()
    });
    let subsemigroup_count = degrade(enumerate_subsemigroups(&m, 1, true))?.map(|f| {
        f.members.iter().filter(|s| !s.is_full()).count()
    });
    let left_ideal_count = degrade(enumerate_ideals(&m, IdealSide::Left))?.map(|v| v.len());
    let right_ideal_count = degrade(enumerate_ideals(&m, IdealSide::Right))?.map(|v| v.len());

    let plain = !spec.adjoin_identity;
    let idempotent_row = pred.residues.t_plus_u == 1;
    Ok(CensusRecord {
        n: spec.n,
        t: spec.t,
        u: spec.u,
        adjoined: spec.adjoin_identity,
        class: spec.class().to_string(),
        order: m.order(),
        commutative: basic.commutative,
        associative: basic.associative,
        idempotent_groupoid: basic.idempotent_groupoid(),
        strictly_noncommutative: basic.strictly_noncommutative,
        left_identity_count: basic.left_identities.len(),
        right_identity_count: basic.right_identities.len(),
        moufang,
        bol,
        p,
        lalt,
        ralt,
        alt,
        sg,
        degenerate_sg,
        sg_witness,
        s_commutative: degrade(groupoid_core::s_commutative(&m, policy))?,
        s_inner_comm: degrade(s_inner_commutative(&m, policy))?,
        s_moufang_weak: s_laws[0],
        s_moufang_strong: s_laws[1],
        s_bol_weak: s_laws[2],
        s_bol_strong: s_laws[3],
        s_p_weak: s_laws[4],
        s_p_strong: s_laws[5],
        s_alt_weak: s_laws[6],
        s_alt_strong: s_laws[7],
        s_idempotent: degrade(s_idempotent(&m, policy))?,
        closed_count,
        subsemigroup_count,
        left_ideal_count,
        right_ideal_count,
        s_subgroupoid_count,
        pred_semigroup: pred.semigroup,
        pred_idempotent: pred.idempotent_groupoid,
        pred_p: pred.strong_p,
        pred_alt: pred.strong_alternative,
        pred_bol: pred.strong_bol,
        pred_moufang: pred.strong_moufang,
        pred_adj_ralt: pred.adjoined_right_alt,
        pred_adj_lalt: pred.adjoined_left_alt,
        agree_semigroup: plain.then_some(pred.semigroup == basic.associative),
        agree_idempotent: plain.then_some(pred.idempotent_groupoid == basic.idempotent_groupoid()),
        agree_p: (plain && idempotent_row).then_some(pred.strong_p == p),
        agree_alt: (plain && idempotent_row).then_some(pred.strong_alternative == alt),
        agree_bol: (plain && idempotent_row).then_some(pred.strong_bol == bol),
        agree_moufang: (plain && idempotent_row).then_some(pred.strong_moufang == moufang),
        agree_adj_ralt: spec.adjoin_identity.then_some(pred.adjoined_right_alt == ralt),
        agree_adj_lalt: spec.adjoin_identity.then_some(pred.adjoined_left_alt == lalt),
    })
}

/// Census over every machine of the class for each modulus in `lo..=hi`,
/// in (n, t, u) order. Moduli beyond `max_modulus` are refused outright.
pub fn census(
    tag: ClassTag,
    adjoined: bool,
    lo: usize,
    hi: usize,
    max_modulus: usize,
) -> Result<Vec<CensusRecord>> {
    if hi > max_modulus {
        return Err(Error::BoundExceeded {
            n: hi,
            bound: max_modulus,
        });
    }
    if lo < 3 || lo > hi {
        return Err(Error::Parse(format!(
            "modulus range must satisfy 3 <= A <= B, got {lo}..{hi}"
        )));
    }
    let mut out = Vec::new();
    for n in lo..=hi {
        for (t, u) in enumerate_class(n, tag) {
            let spec = ZnSpec::new(n, t, u, adjoined).expect("class members are valid specs");
            out.push(census_record(&spec)?);
        }
    }
    Ok(out)
}

fn cell_bool(b: bool) -> String {
    b.to_string()
}

fn cell_opt<T: ToString>(o: &Option<T>) -> String {
    match o {
        Some(v) => v.to_string(),
        None => NOT_COMPUTED.to_string(),
    }
}

impl CensusRecord {
    /// The row as CSV cells, matching `CSV_COLUMNS`. A missing witness on a
    /// machine that was actually searched renders as an empty cell; the
    /// "not computed" marker is reserved for skipped computations.
    pub fn csv_cells(&self) -> Vec<String> {
        let witness_cell = match (&self.sg, &self.sg_witness) {
            (None, _) => NOT_COMPUTED.to_string(),
            (Some(_), Some(w)) => w.clone(),
            (Some(_), None) => String::new(),
        };
        vec![
            self.n.to_string(),
            self.t.to_string(),
            self.u.to_string(),
            cell_bool(self.adjoined),
            self.class.clone(),
            self.order.to_string(),
            cell_bool(self.commutative),
            cell_bool(self.associative),
            cell_bool(self.idempotent_groupoid),
            cell_bool(self.strictly_noncommutative),
            self.left_identity_count.to_string(),
            self.right_identity_count.to_string(),
            cell_bool(self.moufang),
            cell_bool(self.bol),
            cell_bool(self.p),
            cell_bool(self.lalt),
            cell_bool(self.ralt),
            cell_bool(self.alt),
            cell_opt(&self.sg),
            cell_opt(&self.degenerate_sg),
            witness_cell,
            cell_opt(&self.s_commutative),
            cell_opt(&self.s_inner_comm),
            cell_opt(&self.s_moufang_weak),
            cell_opt(&self.s_moufang_strong),
            cell_opt(&self.s_bol_weak),
            cell_opt(&self.s_bol_strong),
            cell_opt(&self.s_p_weak),
            cell_opt(&self.s_p_strong),
            cell_opt(&self.s_alt_weak),
            cell_opt(&self.s_alt_strong),
            cell_opt(&self.s_idempotent),
            cell_opt(&self.closed_count),
            cell_opt(&self.subsemigroup_count),
            cell_opt(&self.left_ideal_count),
            cell_opt(&self.right_ideal_count),
            cell_opt(&self.s_subgroupoid_count),
            cell_bool(self.pred_semigroup),
            cell_bool(self.pred_idempotent),
            cell_bool(self.pred_p),
            cell_bool(self.pred_alt),
            cell_bool(self.pred_bol),
            cell_bool(self.pred_moufang),
            cell_bool(self.pred_adj_ralt),
            cell_bool(self.pred_adj_lalt),
            cell_opt(&self.agree_semigroup),
            cell_opt(&self.agree_idempotent),
            cell_opt(&self.agree_p),
            cell_opt(&self.agree_alt),
            cell_opt(&self.agree_bol),
            cell_opt(&self.agree_moufang),
            cell_opt(&self.agree_adj_ralt),
            cell_opt(&self.agree_adj_lalt),
        ]
    }

    /// Every agreement column that is populated must be true; `None`
    /// columns carry no claim.
    pub fn agreements_hold(&self) -> bool {
        [
            self.agree_semigroup,
            self.agree_idempotent,
            self.agree_p,
            self.agree_alt,
            self.agree_bol,
            self.agree_moufang,
            self.agree_adj_ralt,
            self.agree_adj_lalt,
        ]
        .iter()
        .all(|a| a.unwrap_or(true))
    }
}

/// Writes the census as CSV with a header row and stable column order.
pub fn write_csv<W: Write>(records: &[CensusRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)
        .map_err(|e| Error::Parse(format!("csv write failed: {e}")))?;
    for r in records {
        w.write_record(r.csv_cells())
            .map_err(|e| Error::Parse(format!("csv write failed: {e}")))?;
    }
    w.flush()
        .map_err(|e| Error::Parse(format!("csv flush failed: {e}")))?;
    Ok(())
}

/// Writes the census as JSON lines, one record per line, fields in struct
/// order; skipped computations serialize as null.
pub fn write_jsonl<W: Write>(records: &[CensusRecord], mut out: W) -> Result<()> {
    for r in records {
        let line = serde_json::to_string(r)
            .map_err(|e| Error::Parse(format!("json encode failed: {e}")))?;
        writeln!(out, "{line}").map_err(|e| Error::Parse(format!("write failed: {e}")))?;
    }
    Ok(())
}
