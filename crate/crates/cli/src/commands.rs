//! Table builders for each subcommand.

use anyhow::{bail, Result};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ucm_core::verify::{run_verification, VerificationReport};
use ucm_core::{
    clone_ancilla_state, concurrence_clone_ancilla_closed, concurrence_x_form,
    eof_from_concurrence, output_state, ppt_three_clone, single_clone_fidelity, three_clone_state,
    two_clone_state, CloneSpec, XFormTwoQubitState,
};

use crate::table::{Cell, Kind, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    Clones,
    CloneAncilla,
}

pub const PAIR_CLONES_COLUMNS: &[(&str, Kind)] = &[
    ("N", Kind::Integer),
    ("M", Kind::Integer),
    ("a", Kind::Exact),
    ("c", Kind::Exact),
    ("e", Kind::Exact),
    ("concurrence", Kind::Decimal),
    ("concurrence_exact_zero", Kind::Flag),
    ("eof", Kind::Decimal),
    ("fidelity", Kind::Exact),
];

pub const PAIR_CLONE_ANCILLA_COLUMNS: &[(&str, Kind)] = &[
    ("N", Kind::Integer),
    ("M", Kind::Integer),
    ("a", Kind::Exact),
    ("b", Kind::Exact),
    ("c", Kind::Surd),
    ("d", Kind::Exact),
    ("e", Kind::Exact),
    ("concurrence", Kind::Decimal),
    ("concurrence_exact_zero", Kind::Flag),
    ("eof", Kind::Decimal),
    ("fidelity", Kind::Exact),
];

pub const FIG1_COLUMNS: &[(&str, Kind)] = &[("M", Kind::Integer), ("concurrence", Kind::Decimal)];

pub const TRIPARTITE_COLUMNS: &[(&str, Kind)] = &[
    ("N", Kind::Integer),
    ("M", Kind::Integer),
    ("p0", Kind::Exact),
    ("p1", Kind::Exact),
    ("p2", Kind::Exact),
    ("p3", Kind::Exact),
    ("npt", Kind::Flag),
    ("condition", Kind::Text),
];

pub const STATE_COLUMNS: &[(&str, Kind)] = &[
    ("N", Kind::Integer),
    ("M", Kind::Integer),
    ("j", Kind::Integer),
    ("alpha_sq", Kind::Exact),
];

pub const VERIFY_COLUMNS: &[(&str, Kind)] = &[
    ("check", Kind::Text),
    ("max_deviation", Kind::Decimal),
    ("tolerance", Kind::Decimal),
    ("passed", Kind::Flag),
];

impl PairKind {
    pub fn columns(self) -> &'static [(&'static str, Kind)] {
        match self {
            PairKind::Clones => PAIR_CLONES_COLUMNS,
            PairKind::CloneAncilla => PAIR_CLONE_ANCILLA_COLUMNS,
        }
    }
}

fn m_range(m: u32, m_max: Option<u32>) -> Result<std::ops::RangeInclusive<u32>> {
    let hi = m_max.unwrap_or(m);
    if hi < m {
        bail!("--m-max {hi} is below --m {m}");
    }
    Ok(m..=hi)
}

fn measures_row(
    spec: CloneSpec,
    state: &XFormTwoQubitState,
    entries: Vec<Cell>,
) -> Result<Vec<Cell>> {
    let c = concurrence_x_form(state);
    let mut row = vec![
        Cell::Integer(spec.n().into()),
        Cell::Integer(spec.m().into()),
    ];
    row.extend(entries);
    row.extend([
        Cell::Decimal(c.value()),
        Cell::Flag(c.is_exact_zero()),
        Cell::Decimal(eof_from_concurrence(c.value())?),
        Cell::Exact(single_clone_fidelity(spec)),
    ]);
    Ok(row)
}

/// Reduced two-qubit states with their entanglement, for `M` in `m..=m_max`.
pub fn pair(n: u32, m: u32, m_max: Option<u32>, kind: PairKind) -> Result<Table> {
    let mut table = Table::new(kind.columns());
    for m in m_range(m, m_max)? {
        let spec = CloneSpec::new(n, m)?;
        let row = match kind {
            PairKind::Clones => {
                let s = two_clone_state(spec)?;
                let c = s
                    .c()
                    .as_rational()
                    .expect("two-clone coherence is rational");
                let entries = vec![
                    Cell::Exact(s.a().clone()),
                    Cell::Exact(c),
                    Cell::Exact(s.e().clone()),
                ];
                measures_row(spec, &s, entries)?
            }
            PairKind::CloneAncilla => {
                let s = clone_ancilla_state(spec)?;
                let entries = vec![
                    Cell::Exact(s.a().clone()),
                    Cell::Exact(s.b().clone()),
                    Cell::Surd(s.c().clone()),
                    Cell::Exact(s.d().clone()),
                    Cell::Exact(s.e().clone()),
                ];
                measures_row(spec, &s, entries)?
            }
        };
        table.push(row);
    }
    Ok(table)
}

/// Clone-ancilla concurrence for a single input, `M = 2..=m_max`.
pub fn fig1(m_max: u32) -> Result<Table> {
    if m_max < 2 {
        bail!("--m-max must be at least 2, got {m_max}");
    }
    let mut table = Table::new(FIG1_COLUMNS);
    for m in 2..=m_max {
        table.push(vec![
            Cell::Integer(m.into()),
            Cell::Decimal(concurrence_clone_ancilla_closed(m)?),
        ]);
    }
    Ok(table)
}

pub fn tripartite(n: u32, m: u32, m_max: Option<u32>) -> Result<Table> {
    let mut table = Table::new(TRIPARTITE_COLUMNS);
    for m in m_range(m, m_max)? {
        let spec = CloneSpec::new(n, m)?;
        let mix = three_clone_state(spec)?;
        let verdict = ppt_three_clone(&mix);
        let mut row = vec![Cell::Integer(n.into()), Cell::Integer(m.into())];
        row.extend(mix.weights().iter().cloned().map(Cell::Exact));
        row.push(Cell::Flag(verdict.is_npt));
        row.push(Cell::Text(verdict.witness.as_str().to_string()));
        table.push(row);
    }
    Ok(table)
}

pub fn state(n: u32, m: u32) -> Result<Table> {
    let spec = CloneSpec::new(n, m)?;
    let mut table = Table::new(STATE_COLUMNS);
    for (j, a) in output_state(spec).amp_sq().iter().enumerate() {
        table.push(vec![
            Cell::Integer(n.into()),
            Cell::Integer(m.into()),
            Cell::Integer(j as u64),
            Cell::Exact(a.clone()),
        ]);
    }
    Ok(table)
}

pub const DEFAULT_SEED: u64 = 0x5eed;

pub fn verify(m_cap: u32, seed: u64) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(run_verification(m_cap, &mut rng)?)
}

/// One row per check kind: worst deviation over the grid.
pub fn verify_table(report: &VerificationReport) -> Table {
    let mut table = Table::new(VERIFY_COLUMNS);
    for (check, worst, passed) in report.worst_by_check() {
        let tolerance = report
            .outcomes
            .iter()
            .find(|o| o.check == check)
            .map_or(0.0, |o| o.tolerance);
        table.push(vec![
            Cell::Text(check.name().to_string()),
            Cell::Decimal(worst),
            Cell::Decimal(tolerance),
            Cell::Flag(passed),
        ]);
    }
    table
}
