use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A deterministic state machine `(Z, A, δ)`: `states` many states,
/// `letters` many input letters, and a total next-state function stored
/// row-major (`delta[z * letters + a]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiAutomaton {
    states: usize,
    letters: usize,
    delta: Vec<usize>,
    state_labels: Option<Vec<String>>,
    input_labels: Option<Vec<String>>,
}

impl SemiAutomaton {
    pub fn new(states: usize, letters: usize, delta: Vec<usize>) -> Result<Self> {
        if states == 0 {
            return Err(Error::InvalidSpec("a machine needs at least one state".into()));
        }
        if letters == 0 {
            return Err(Error::InvalidSpec(
                "a machine needs at least one input letter".into(),
            ));
        }
        validate_table("transition", &delta, states, letters, states)?;
        Ok(SemiAutomaton {
            states,
            letters,
            delta,
            state_labels: None,
            input_labels: None,
        })
    }

    /// Builds from one `Vec` per state; the alphabet size is the row width.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let (states, letters, flat) = flatten_rows("transition", rows)?;
        SemiAutomaton::new(states, letters, flat)
    }

    pub fn with_state_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.states {
            return Err(Error::InvalidSpec(format!(
                "{} state labels for {} states",
                labels.len(),
                self.states
            )));
        }
        self.state_labels = Some(labels);
        Ok(self)
    }

    pub fn with_input_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.letters {
            return Err(Error::InvalidSpec(format!(
                "{} input labels for {} letters",
                labels.len(),
                self.letters
            )));
        }
        self.input_labels = Some(labels);
        Ok(self)
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    pub fn delta_row(&self, z: usize) -> &[usize] {
        &self.delta[z * self.letters..(z + 1) * self.letters]
    }

    /// Checked transition lookup.
    pub fn next_state(&self, z: usize, a: usize) -> Result<usize> {
        self.check_state(z)?;
        self.check_letter(a)?;
        Ok(self.step(z, a))
    }

    pub(crate) fn step(&self, z: usize, a: usize) -> usize {
        self.delta[z * self.letters + a]
    }

    pub(crate) fn check_state(&self, z: usize) -> Result<()> {
        if z >= self.states {
            return Err(Error::StateOutOfRange {
                state: z,
                states: self.states,
            });
        }
        Ok(())
    }

    pub(crate) fn check_letter(&self, a: usize) -> Result<()> {
        if a >= self.letters {
            return Err(Error::LetterOutOfRange {
                letter: a,
                letters: self.letters,
            });
        }
        Ok(())
    }

    pub fn state_label(&self, z: usize) -> String {
        match &self.state_labels {
            Some(labels) => labels[z].clone(),
            None => z.to_string(),
        }
    }

    pub fn input_label(&self, a: usize) -> String {
        match &self.input_labels {
            Some(labels) => labels[a].clone(),
            None => a.to_string(),
        }
    }

    /// `k n` header followed by one transition row per state.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.states, self.letters);
        for z in 0..self.states {
            push_row(&mut out, self.delta_row(z));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = numeric_lines(text)?;
        let header = take_header(&mut lines, 2, "k n")?;
        let (states, letters) = (header[0], header[1]);
        let delta = take_rows(&mut lines, states, letters, "transition")?;
        expect_exhausted(&lines)?;
        SemiAutomaton::new(states, letters, delta)
    }

    /// Deterministic DOT rendering: one node per state, one edge per
    /// `(state, letter)` pair, edges labeled by the letter.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph semiautomaton {\n  rankdir=LR;\n");
        for z in 0..self.states {
            let _ = writeln!(out, "  {} [label=\"{}\"];", z, escape(&self.state_label(z)));
        }
        for z in 0..self.states {
            for a in 0..self.letters {
                let _ = writeln!(
                    out,
                    "  {} -> {} [label=\"{}\"];",
                    z,
                    self.step(z, a),
                    escape(&self.input_label(a))
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

/// A Mealy machine `(Z, A, B, δ, λ)`: a semi-automaton plus an output
/// alphabet of size `outputs` and a total output function, also row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    semi: SemiAutomaton,
    outputs: usize,
    lambda: Vec<usize>,
}

impl Automaton {
    pub fn new(
        states: usize,
        letters: usize,
        outputs: usize,
        delta: Vec<usize>,
        lambda: Vec<usize>,
    ) -> Result<Self> {
        let semi = SemiAutomaton::new(states, letters, delta)?;
        if outputs == 0 {
            return Err(Error::InvalidSpec(
                "a machine needs at least one output letter".into(),
            ));
        }
        validate_table("output", &lambda, states, letters, outputs)?;
        Ok(Automaton {
            semi,
            outputs,
            lambda,
        })
    }

    /// Builds from per-state rows; both tables must have the same shape.
    pub fn from_rows(delta_rows: &[Vec<usize>], lambda_rows: &[Vec<usize>], outputs: usize) -> Result<Self> {
        let (states, letters, delta) = flatten_rows("transition", delta_rows)?;
        let (lstates, lletters, lambda) = flatten_rows("output", lambda_rows)?;
        if (states, letters) != (lstates, lletters) {
            return Err(Error::InvalidSpec(format!(
                "output table is {lstates}×{lletters} but transition table is {states}×{letters}"
            )));
        }
        Automaton::new(states, letters, outputs, delta, lambda)
    }

    pub fn with_state_labels(mut self, labels: Vec<String>) -> Result<Self> {
        self.semi = self.semi.with_state_labels(labels)?;
        Ok(self)
    }

    pub fn with_input_labels(mut self, labels: Vec<String>) -> Result<Self> {
        self.semi = self.semi.with_input_labels(labels)?;
        Ok(self)
    }

    pub fn semi(&self) -> &SemiAutomaton {
        &self.semi
    }

    pub fn states(&self) -> usize {
        self.semi.states
    }

    pub fn letters(&self) -> usize {
        self.semi.letters
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn lambda_row(&self, z: usize) -> &[usize] {
        &self.lambda[z * self.semi.letters..(z + 1) * self.semi.letters]
    }

    /// Checked output lookup.
    pub fn output(&self, z: usize, a: usize) -> Result<usize> {
        self.semi.check_state(z)?;
        self.semi.check_letter(a)?;
        Ok(self.out(z, a))
    }

    pub(crate) fn out(&self, z: usize, a: usize) -> usize {
        self.lambda[z * self.semi.letters + a]
    }

    /// `k n m` header, then the transition rows, then the output rows.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.states(), self.letters(), self.outputs);
        for z in 0..self.states() {
            push_row(&mut out, self.semi.delta_row(z));
        }
        for z in 0..self.states() {
            push_row(&mut out, self.lambda_row(z));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = numeric_lines(text)?;
        let header = take_header(&mut lines, 3, "k n m")?;
        let (states, letters, outputs) = (header[0], header[1], header[2]);
        let delta = take_rows(&mut lines, states, letters, "transition")?;
        let lambda = take_rows(&mut lines, states, letters, "output")?;
        expect_exhausted(&lines)?;
        Automaton::new(states, letters, outputs, delta, lambda)
    }

    /// DOT rendering with edges labeled `a/λ(z,a)`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
        for z in 0..self.states() {
            let _ = writeln!(
                out,
                "  {} [label=\"{}\"];",
                z,
                escape(&self.semi.state_label(z))
            );
        }
        for z in 0..self.states() {
            for a in 0..self.letters() {
                let _ = writeln!(
                    out,
                    "  {} -> {} [label=\"{}/{}\"];",
                    z,
                    self.semi.step(z, a),
                    escape(&self.semi.input_label(a)),
                    self.out(z, a)
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

fn validate_table(
    what: &str,
    table: &[usize],
    states: usize,
    letters: usize,
    range: usize,
) -> Result<()> {
    let expected = states * letters;
    if table.len() != expected {
        return Err(Error::InvalidSpec(format!(
            "{what} table has {} entries, expected {expected} ({states} states × {letters} letters)",
            table.len()
        )));
    }
    for (pos, &entry) in table.iter().enumerate() {
        if entry >= range {
            return Err(Error::InvalidSpec(format!(
                "{what} entry {entry} at state {}, letter {} is not below {range}",
                pos / letters,
                pos % letters
            )));
        }
    }
    Ok(())
}

fn flatten_rows(what: &str, rows: &[Vec<usize>]) -> Result<(usize, usize, Vec<usize>)> {
    if rows.is_empty() {
        return Err(Error::InvalidSpec(format!("{what} table has no rows")));
    }
    let letters = rows[0].len();
    let mut flat = Vec::with_capacity(rows.len() * letters);
    for (z, row) in rows.iter().enumerate() {
        if row.len() != letters {
            return Err(Error::InvalidSpec(format!(
                "{what} row {z} has {} entries, expected {letters}",
                row.len()
            )));
        }
        flat.extend_from_slice(row);
    }
    Ok((rows.len(), letters, flat))
}

fn push_row(out: &mut String, row: &[usize]) {
    for (k, e) in row.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{e}");
    }
    out.push('\n');
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

fn numeric_lines(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for token in line.split_whitespace() {
            let value = token
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected a number, found {token:?}")))?;
            row.push(value);
        }
        rows.push(row);
    }
    // Reverse so take_header/take_rows can pop from the back cheaply.
    rows.reverse();
    Ok(rows)
}

fn take_header(lines: &mut Vec<Vec<usize>>, arity: usize, shape: &str) -> Result<Vec<usize>> {
    let header = lines
        .pop()
        .ok_or_else(|| Error::Parse("empty machine description".into()))?;
    if header.len() != arity {
        return Err(Error::Parse(format!(
            "header must be `{shape}`, found {} numbers",
            header.len()
        )));
    }
    Ok(header)
}

fn take_rows(
    lines: &mut Vec<Vec<usize>>,
    states: usize,
    letters: usize,
    what: &str,
) -> Result<Vec<usize>> {
    let mut flat = Vec::with_capacity(states * letters);
    for z in 0..states {
        let row = lines
            .pop()
            .ok_or_else(|| Error::Parse(format!("missing {what} row {z}")))?;
        if row.len() != letters {
            return Err(Error::Parse(format!(
                "{what} row {z} has {} entries, expected {letters}",
                row.len()
            )));
        }
        flat.extend_from_slice(&row);
    }
    Ok(flat)
}

fn expect_exhausted(lines: &[Vec<usize>]) -> Result<()> {
    if lines.is_empty() {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "{} extra lines after the machine tables",
            lines.len()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_state() -> SemiAutomaton {
        SemiAutomaton::from_rows(&[vec![0, 1], vec![0, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn construction_validates_shape_and_entries() {
        assert!(SemiAutomaton::new(0, 2, vec![]).is_err());
        assert!(SemiAutomaton::new(2, 0, vec![]).is_err());

        let err = SemiAutomaton::new(2, 2, vec![0, 1, 1]).unwrap_err();
        assert_eq!(err.code(), "INVALID_SPEC");
        assert!(err.to_string().contains("3 entries, expected 4"));

        let err = SemiAutomaton::new(2, 2, vec![0, 1, 1, 2]).unwrap_err();
        assert!(err.to_string().contains("entry 2 at state 1, letter 1"));

        let err = Automaton::new(2, 1, 2, vec![0, 1], vec![5, 0]).unwrap_err();
        assert!(err.to_string().contains("output entry 5"));
    }

    #[test]
    fn checked_lookups_report_ranges() {
        let sa = three_state();
        assert_eq!(sa.next_state(2, 1).unwrap(), 1);
        assert_eq!(
            sa.next_state(3, 0).unwrap_err(),
            Error::StateOutOfRange { state: 3, states: 3 }
        );
        assert_eq!(
            sa.next_state(0, 2).unwrap_err(),
            Error::LetterOutOfRange { letter: 2, letters: 2 }
        );
    }

    #[test]
    fn labels_default_to_indices() {
        let sa = three_state()
            .with_state_labels(vec!["p".into(), "q".into(), "r".into()])
            .unwrap();
        assert_eq!(sa.state_label(2), "r");
        assert_eq!(sa.input_label(1), "1");
        assert!(three_state().with_state_labels(vec!["p".into()]).is_err());
    }

    #[test]
    fn text_roundtrip_semi_and_auto() {
        let sa = three_state();
        let text = sa.to_text();
        assert_eq!(text, "3 2\n0 1\n0 1\n1 1\n");
        assert_eq!(SemiAutomaton::from_text(&text).unwrap(), sa);

        let at = Automaton::from_rows(
            &[vec![0, 1], vec![1, 0]],
            &[vec![0, 1], vec![0, 1]],
            2,
        )
        .unwrap();
        let text = at.to_text();
        assert_eq!(text, "2 2 2\n0 1\n1 0\n0 1\n0 1\n");
        assert_eq!(Automaton::from_text(&text).unwrap(), at);
    }

    #[test]
    fn parser_rejects_malformed_text() {
        assert_eq!(SemiAutomaton::from_text("").unwrap_err().code(), "PARSE");
        assert!(SemiAutomaton::from_text("2 2 2\n0 1\n0 1\n0 1\n0 1\n").is_err());
        assert!(SemiAutomaton::from_text("2 2\n0 1\n0\n").is_err());
        assert!(SemiAutomaton::from_text("2 2\n0 1\n0 1\n0 1\n").is_err());
        assert!(SemiAutomaton::from_text("2 2\n0 x\n0 1\n").is_err());
        // Comments and blank lines are tolerated.
        let sa = SemiAutomaton::from_text("# parity transitions\n2 2\n\n0 1\n1 0\n").unwrap();
        assert_eq!(sa.delta_row(1), &[1, 0]);
    }

    #[test]
    fn dot_output_is_sorted_and_labeled() {
        let dot = three_state().to_dot();
        let lines: Vec<&str> = dot.lines().collect();
        assert_eq!(lines[0], "digraph semiautomaton {");
        assert!(dot.contains("  2 -> 1 [label=\"1\"];"));
        // Node declarations precede edges; edges are emitted row by row.
        let first_edge = lines.iter().position(|l| l.contains("->")).unwrap();
        assert_eq!(first_edge, 2 + 3);

        let at = Automaton::from_rows(&[vec![1], vec![0]], &[vec![1], vec![0]], 2).unwrap();
        assert!(at.to_dot().contains("  0 -> 1 [label=\"0/1\"];"));
    }
}
