//! Config-driven runs, CSV persistence and the bundled example scenarios.
//!
//! Everything here works in `f64`.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{self, File};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::adjoint::{bracket_decompose, BracketKind, HamiltonianCoeffs};
use crate::coherence::{
    density_eigenvalues, product, pt_eigenvalues, purity, CoherenceTensor,
};
use crate::error::{invalid, Error, Result};
use crate::gates::{
    cnot_gate, cnot_hamiltonian, cubitt_final, cubitt_gates, cubitt_intermediate, format_grid,
    named_state, r_cnot, STATE_NAMES,
};
use crate::multi_index::{MultiIndex, MAX_QUBITS};
use crate::propagator::{propagate, Schedule, Segment, Trajectory};

/// JSON run description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationConfig {
    pub n: usize,
    pub initial: InitialSpec,
    pub schedule: Vec<SegmentSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample_step: Option<f64>,
    #[serde(default)]
    pub outputs: OutputSpec,
}

/// A named state, a product of named states (left factor on the first
/// qubits), or an explicit component list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InitialSpec {
    Named(String),
    Product(Vec<String>),
    Components(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentSpec {
    pub terms: BTreeMap<String, f64>,
    pub duration: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default = "yes")]
    pub components: bool,
    #[serde(default)]
    pub density_eigenvalues: bool,
    /// Cuts as qubit letters, e.g. `"A"` or `"BC"`.
    #[serde(default)]
    pub pt_eigenvalues: Vec<String>,
}

fn yes() -> bool {
    true
}

impl Default for OutputSpec {
    fn default() -> Self {
        Self {
            components: true,
            density_eigenvalues: false,
            pt_eigenvalues: Vec::new(),
        }
    }
}

/// Validated form of a [`SimulationConfig`].
#[derive(Clone, Debug)]
pub struct PreparedRun {
    pub initial: CoherenceTensor<f64>,
    pub schedule: Schedule<f64>,
    pub cuts: Vec<Cut>,
    pub outputs: OutputSpec,
}

/// A set of qubits to partially transpose, with its letter label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub label: String,
    pub qubits: Vec<usize>,
}

impl Cut {
    pub fn parse(label: &str, n: usize) -> Result<Self> {
        if label.is_empty() {
            return Err(Error::Validation("empty cut".into()));
        }
        let mut qubits = Vec::new();
        for ch in label.chars() {
            let q = match ch {
                'A'..='Z' => ch as usize - 'A' as usize + 1,
                _ => 0,
            };
            if q == 0 || q > n {
                return Err(Error::Validation(format!(
                    "cut {label:?}: {ch:?} is not one of the first {n} letters"
                )));
            }
            if qubits.contains(&q) {
                return Err(Error::Validation(format!("cut {label:?} repeats {ch:?}")));
            }
            qubits.push(q);
        }
        Ok(Self {
            label: label.to_string(),
            qubits,
        })
    }
}

fn natural_size(name: &str) -> Option<usize> {
    match name {
        "plus" => Some(1),
        "cubitt_in" => Some(3),
        n if STATE_NAMES.contains(&n) => Some(2),
        _ => None,
    }
}

fn at(path: &str, e: Error) -> Error {
    let msg = match e {
        Error::InvalidArgument(m) | Error::Validation(m) | Error::Parse(m) => m,
        other => other.to_string(),
    };
    Error::Validation(format!("{path}: {msg}"))
}

impl SimulationConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::Parse(format!("{path}: {}", e.into_inner()))
        })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn prepare(&self) -> Result<PreparedRun> {
        let n = self.n;
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::Validation(format!("n: {n} outside 1..={MAX_QUBITS}")));
        }
        let initial = self.initial_state().map_err(|e| at("initial", e))?;

        let mut segments = Vec::with_capacity(self.schedule.len());
        for (i, seg) in self.schedule.iter().enumerate() {
            let mut terms = Vec::with_capacity(seg.terms.len());
            for (key, &v) in &seg.terms {
                let path = format!("schedule[{i}].terms.{key}");
                let m: MultiIndex = key.parse().map_err(|e| at(&path, e))?;
                if m.len() != n {
                    return Err(at(&path, invalid(format!("length {} differs from n = {n}", m.len()))));
                }
                if !v.is_finite() {
                    return Err(at(&path, invalid("coefficient is not finite")));
                }
                terms.push((m, v));
            }
            if seg.duration <= 0.0 || !seg.duration.is_finite() {
                return Err(at(
                    &format!("schedule[{i}].duration"),
                    invalid(format!("{} is not a positive time", seg.duration)),
                ));
            }
            segments.push(Segment {
                hamiltonian: HamiltonianCoeffs::new(n, terms).map_err(|e| at(&format!("schedule[{i}]"), e))?,
                duration: seg.duration,
            });
        }
        if segments.is_empty() {
            return Err(Error::Validation("schedule: no segments".into()));
        }
        let schedule = Schedule::new(n, segments, self.sample_step).map_err(|e| at("sample_step", e))?;

        let cuts = self
            .outputs
            .pt_eigenvalues
            .iter()
            .enumerate()
            .map(|(i, c)| Cut::parse(c, n).map_err(|e| at(&format!("outputs.pt_eigenvalues[{i}]"), e)))
            .collect::<Result<Vec<_>>>()?;

        Ok(PreparedRun {
            initial,
            schedule,
            cuts,
            outputs: self.outputs.clone(),
        })
    }

    fn initial_state(&self) -> Result<CoherenceTensor<f64>> {
        let n = self.n;
        match &self.initial {
            InitialSpec::Named(name) => named_state(name, n),
            InitialSpec::Product(names) => {
                let mut acc: Option<CoherenceTensor<f64>> = None;
                for name in names {
                    let k = natural_size(name).ok_or_else(|| invalid(format!("unknown state {name:?}")))?;
                    let s = named_state(name, k)?;
                    acc = Some(match acc {
                        None => s,
                        Some(a) => product(&a, &s)?,
                    });
                }
                let t = acc.ok_or_else(|| invalid("empty product"))?;
                if t.n() != n {
                    return Err(invalid(format!("product has {} qubits, n = {n}", t.n())));
                }
                Ok(t)
            }
            InitialSpec::Components(c) => {
                let t = CoherenceTensor::new(n, c.clone())?;
                let p = purity(&t);
                let lo = 0.5f64.powi(n as i32);
                if p < lo - 1e-12 || p > 1.0 + 1e-12 {
                    return Err(Error::Validation(format!("purity {p} outside [{lo}, 1]")));
                }
                Ok(t)
            }
        }
    }
}

/// Header line of every CSV written here.
#[derive(Clone, Debug, PartialEq)]
pub struct Metadata {
    pub n: usize,
    pub schedule_hash: String,
    pub sample_step: f64,
}

impl fmt::Display for Metadata {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "# n={} schedule_hash={} sample_step={:.16e}",
            self.n, self.schedule_hash, self.sample_step
        )
    }
}

impl FromStr for Metadata {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let body = line
            .strip_prefix('#')
            .ok_or_else(|| Error::Parse("metadata line must start with '#'".into()))?;
        let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
        for kv in body.split_whitespace() {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("metadata field {kv:?}")))?;
            fields.insert(k, v);
        }
        let get = |k: &str| {
            fields
                .get(k)
                .copied()
                .ok_or_else(|| Error::Parse(format!("metadata lacks {k}")))
        };
        Ok(Self {
            n: get("n")?.parse().map_err(|e| Error::Parse(format!("n: {e}")))?,
            schedule_hash: get("schedule_hash")?.to_string(),
            sample_step: get("sample_step")?
                .parse()
                .map_err(|e| Error::Parse(format!("sample_step: {e}")))?,
        })
    }
}

/// Truncated SHA-256 of the segment list.
pub fn schedule_hash(s: &Schedule<f64>) -> String {
    let mut h = Sha256::new();
    for seg in s.segments() {
        for (m, v) in seg.hamiltonian.terms() {
            h.update(format!("{m}:{v:.16e};").as_bytes());
        }
        h.update(format!("|{:.16e}\n", seg.duration).as_bytes());
    }
    hex::encode(&h.finalize()[..8])
}

/// A time-indexed numeric table.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub meta: Metadata,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut file = File::create(path).map_err(|e| Error::io(path, e))?;
        writeln!(file, "{}", self.meta).map_err(|e| Error::io(path, e))?;
        let mut w = csv::Writer::from_writer(file);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| format!("{v:.16e}")))?;
        }
        w.flush().map_err(|e| Error::io(path, e))?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        let mut reader = BufReader::new(file);
        let mut first = String::new();
        reader.read_line(&mut first).map_err(|e| Error::io(path, e))?;
        let meta: Metadata = first.trim_end().parse()?;
        let mut r = csv::Reader::from_reader(reader);
        let columns: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for rec in r.records() {
            let rec = rec?;
            let row = rec
                .iter()
                .map(|v| v.parse::<f64>().map_err(|e| Error::Parse(format!("value {v:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(Self { meta, columns, rows })
    }
}

/// Reads a CSV written by [`run_simulate`].
pub fn read_trajectory_csv(path: &Path) -> Result<Table> {
    Table::read(path)
}

/// Builds the output table for a trajectory.
pub fn trajectory_table(run: &PreparedRun, traj: &Trajectory<f64>) -> Result<Table> {
    let n = run.schedule.n();
    let mut columns = vec!["t".to_string()];
    if run.outputs.components {
        columns.extend(MultiIndex::all(n).map(|m| format!("c_{m}")));
    }
    let dim = 1usize << n;
    if run.outputs.density_eigenvalues {
        columns.extend((0..dim).map(|k| format!("eig_rho_{k}")));
    }
    for cut in &run.cuts {
        columns.extend((0..dim).map(|k| format!("eig_pt{}_{k}", cut.label)));
    }
    let mut rows = Vec::with_capacity(traj.len());
    for (&t, state) in traj.times.iter().zip(&traj.states) {
        let mut row = vec![t];
        if run.outputs.components {
            row.extend_from_slice(state.components());
        }
        if run.outputs.density_eigenvalues {
            row.extend(density_eigenvalues(state)?);
        }
        for cut in &run.cuts {
            row.extend(pt_eigenvalues(state, &cut.qubits)?);
        }
        rows.push(row);
    }
    Ok(Table {
        meta: Metadata {
            n,
            schedule_hash: schedule_hash(&run.schedule),
            sample_step: run.schedule.sample_step(),
        },
        columns,
        rows,
    })
}

/// Result of [`run_simulate`].
#[derive(Clone, Debug)]
pub struct Summary {
    pub samples: usize,
    pub initial_purity: f64,
    pub final_purity: f64,
    /// Smallest partial-transpose eigenvalue seen over the run, per cut.
    pub min_pt: Vec<(String, f64)>,
    pub wall_time: Duration,
    pub table: Table,
    pub trajectory: Trajectory<f64>,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "samples        {}", self.samples)?;
        writeln!(f, "initial purity {:.15}", self.initial_purity)?;
        writeln!(f, "final purity   {:.15}", self.final_purity)?;
        for (cut, v) in &self.min_pt {
            writeln!(f, "min eig PT_{cut:<4} {v:.12e}")?;
        }
        write!(f, "wall time      {:.3} s", self.wall_time.as_secs_f64())
    }
}

/// Runs a validated config in memory.
pub fn simulate(run: &PreparedRun) -> Result<Summary> {
    let start = Instant::now();
    let trajectory = propagate(&run.initial, &run.schedule)?;
    let table = trajectory_table(run, &trajectory)?;
    let min_pt = run
        .cuts
        .iter()
        .map(|cut| {
            let first = table
                .columns
                .iter()
                .position(|c| c == &format!("eig_pt{}_0", cut.label))
                .expect("cut column");
            let m = table.rows.iter().map(|r| r[first]).fold(f64::INFINITY, f64::min);
            (cut.label.clone(), m)
        })
        .collect();
    Ok(Summary {
        samples: trajectory.len(),
        initial_purity: purity(&run.initial),
        final_purity: purity(trajectory.last().expect("nonempty")),
        min_pt,
        wall_time: start.elapsed(),
        table,
        trajectory,
    })
}

/// Validates, runs and writes one CSV.
pub fn run_simulate(config: &SimulationConfig, out_path: &Path) -> Result<Summary> {
    let run = config.prepare()?;
    let summary = simulate(&run)?;
    summary.table.write(out_path)?;
    log::info!("wrote {} rows to {}", summary.table.rows.len(), out_path.display());
    Ok(summary)
}

/// The bundled examples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Example {
    Cnot,
    Swap,
    Cubitt,
}

impl FromStr for Example {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cnot" => Ok(Example::Cnot),
            "swap" => Ok(Example::Swap),
            "cubitt" => Ok(Example::Cubitt),
            other => Err(invalid(format!("unknown example {other:?}; expected cnot, swap or cubitt"))),
        }
    }
}

/// `2 sqrt(2) pi`, the period of the swap Hamiltonians on 3 qubits.
pub fn swap_period() -> f64 {
    2.0 * std::f64::consts::SQRT_2 * std::f64::consts::PI
}

/// Bell pair on AB times `plus` on C, driven by `Lambda_033` then
/// `Lambda_220`, each for a quarter period.
pub fn swap_config(outputs: OutputSpec) -> SimulationConfig {
    let quarter = swap_period() / 4.0;
    SimulationConfig {
        n: 3,
        initial: InitialSpec::Product(vec!["bell_ab".into(), "plus".into()]),
        schedule: vec![
            SegmentSpec {
                terms: BTreeMap::from([("033".to_string(), 1.0)]),
                duration: quarter,
            },
            SegmentSpec {
                terms: BTreeMap::from([("220".to_string(), 1.0)]),
                duration: quarter,
            },
        ],
        sample_step: None,
        outputs,
    }
}

/// The two-gate cascade on the separable input state.
pub fn cubitt_config(outputs: OutputSpec) -> SimulationConfig {
    SimulationConfig {
        n: 3,
        initial: InitialSpec::Named("cubitt_in".into()),
        schedule: cubitt_gates::<f64>()
            .iter()
            .map(|g| SegmentSpec {
                terms: g
                    .hamiltonian
                    .terms()
                    .iter()
                    .map(|(m, v)| (m.to_string(), *v))
                    .collect(),
                duration: g.duration,
            })
            .collect(),
        sample_step: None,
        outputs,
    }
}

/// Files written by [`run_reproduce`] and a few headline numbers.
#[derive(Clone, Debug)]
pub struct ReproduceSummary {
    pub example: Example,
    pub files: Vec<PathBuf>,
    pub values: Vec<(String, f64)>,
}

impl fmt::Display for ReproduceSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.files {
            writeln!(f, "wrote {}", p.display())?;
        }
        for (k, v) in &self.values {
            writeln!(f, "{k:<28} {v:.12e}")?;
        }
        Ok(())
    }
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn dump_components(t: &CoherenceTensor<f64>) -> String {
    t.nonzero(1e-12)
        .iter()
        .map(|(m, v)| format!("{m}  {v:.16e}\n"))
        .collect()
}

fn cut_outputs(cuts: &[&str], density: bool, components: bool) -> OutputSpec {
    OutputSpec {
        components,
        density_eigenvalues: density,
        pt_eigenvalues: cuts.iter().map(|s| s.to_string()).collect(),
    }
}

/// Regenerates the data behind one of the bundled examples.
pub fn run_reproduce(example: Example, out_dir: &Path) -> Result<ReproduceSummary> {
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut files = Vec::new();
    let mut values = Vec::new();
    match example {
        Example::Cnot => {
            let r = r_cnot::<f64>()?;
            let grid = out_dir.join("r_cnot.txt");
            write_text(&grid, &format_grid(r.entries()))?;
            files.push(grid);

            let mut table = String::from("input,output,max_abs_deviation\n");
            for input in ["comp_00", "comp_01", "comp_10", "comp_11"] {
                let out = r.apply(&named_state(input, 2)?);
                let (best, dev) = ["comp_00", "comp_01", "comp_10", "comp_11"]
                    .iter()
                    .map(|name| {
                        let want = named_state::<f64>(name, 2).expect("named");
                        let d = out
                            .components()
                            .iter()
                            .zip(want.components())
                            .map(|(a, b)| (a - b).abs())
                            .fold(0.0, f64::max);
                        (*name, d)
                    })
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                    .expect("four candidates");
                table.push_str(&format!("{input},{best},{dev:.3e}\n"));
                values.push((format!("{input} -> {best}"), dev));
            }
            let map = out_dir.join("cnot_truth_table.csv");
            write_text(&map, &table)?;
            files.push(map);
        }
        Example::Swap => {
            let comp = out_dir.join("swap_components.csv");
            let s = run_simulate(&swap_config(cut_outputs(&[], false, true)), &comp)?;
            files.push(comp);
            let pt = out_dir.join("swap_pt.csv");
            let s2 = run_simulate(&swap_config(cut_outputs(&["A", "B", "C"], true, false)), &pt)?;
            files.push(pt);
            values.push(("final purity".into(), s.final_purity));
            for (cut, v) in &s2.min_pt {
                values.push((format!("min PT_{cut}"), *v));
            }
        }
        Example::Cubitt => {
            let single = out_dir.join("cubitt_pt_single.csv");
            let s = run_simulate(&cubitt_config(cut_outputs(&["A", "B", "C"], true, false)), &single)?;
            files.push(single);
            let pairs = out_dir.join("cubitt_pt_pairs.csv");
            run_simulate(&cubitt_config(cut_outputs(&["AB", "BC", "AC"], true, false)), &pairs)?;
            files.push(pairs);

            let mid_time = cubitt_gates::<f64>()[0].duration;
            let (_, mid) = s.trajectory.nearest(mid_time).expect("nonempty");
            let last = s.trajectory.last().expect("nonempty");
            for (name, got, want) in [
                ("cubitt_rho_int.txt", mid, cubitt_intermediate::<f64>()),
                ("cubitt_rho_fin.txt", last, cubitt_final::<f64>()),
            ] {
                let p = out_dir.join(name);
                write_text(&p, &dump_components(got))?;
                files.push(p);
                let dev = got
                    .components()
                    .iter()
                    .zip(want.components())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                values.push((format!("{name} deviation"), dev));
            }
            for (cut, v) in &s.min_pt {
                values.push((format!("min PT_{cut}"), *v));
            }
        }
    }
    Ok(ReproduceSummary {
        example,
        files,
        values,
    })
}

/// Decomposition of `-i[Lambda_a, Lambda_b]` (or the anticommutator), one
/// `index  coefficient` line per term.
pub fn run_bracket(a: &str, b: &str, anti: bool) -> Result<String> {
    let a: MultiIndex = a.parse()?;
    let b: MultiIndex = b.parse()?;
    let kind = if anti {
        BracketKind::Anticommutator
    } else {
        BracketKind::Commutator
    };
    let mut terms = bracket_decompose::<f64>(&a, &b, kind)?;
    if terms.is_empty() {
        return Ok("(empty)".into());
    }
    terms.sort_by_key(|(m, _)| m.linear());
    Ok(terms
        .iter()
        .map(|(m, v)| format!("{m}  {v:.12}"))
        .collect::<Vec<_>>()
        .join("\n"))
}

/// Hamiltonian terms and acting time of an embedded C-NOT.
pub fn run_gate_cnot(n: usize, control: usize, target: usize) -> Result<String> {
    let h = cnot_hamiltonian::<f64>(control, target, n)?;
    let g = cnot_gate::<f64>(control, target, n)?;
    let mut out: Vec<String> = h
        .terms()
        .iter()
        .map(|(m, v)| format!("{m}  {v:.12}"))
        .collect();
    out.push(format!("duration  {:.12}", g.duration));
    Ok(out.join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_output() {
        assert_eq!(run_bracket("10", "01", false).unwrap(), "(empty)");
        assert_eq!(run_bracket("1", "2", false).unwrap(), "3  1.414213562373");
        assert_eq!(run_bracket("11", "11", false).unwrap(), "(empty)");
        assert!(run_bracket("14", "01", false).is_err());
        assert!(run_bracket("1", "01", false).is_err());
    }

    #[test]
    fn cut_parsing() {
        assert_eq!(Cut::parse("BC", 3).unwrap().qubits, vec![2, 3]);
        assert!(Cut::parse("D", 3).is_err());
        assert!(Cut::parse("AA", 3).is_err());
        assert!(Cut::parse("a", 3).is_err());
    }

    #[test]
    fn metadata_round_trip() {
        let m = Metadata {
            n: 3,
            schedule_hash: "00ff".into(),
            sample_step: 0.1,
        };
        assert_eq!(m.to_string().parse::<Metadata>().unwrap(), m);
        assert!("n=3".parse::<Metadata>().is_err());
    }

    #[test]
    fn config_errors_carry_paths() {
        let bad = r#"{"n": 2, "initial": "comp_00", "schedule": [{"terms": {"0x": 1.0}, "duration": 1.0}]}"#;
        let e = SimulationConfig::from_json(bad).unwrap().prepare().unwrap_err();
        assert!(e.to_string().contains("schedule[0].terms.0x"), "{e}");
        assert_eq!(e.exit_code(), 2);

        let bad = r#"{"n": 2, "initial": "comp_00", "schedule": [{"terms": {}, "duration": "x"}]}"#;
        let e = SimulationConfig::from_json(bad).unwrap_err();
        assert!(e.to_string().contains("schedule[0].duration"), "{e}");

        let bad = r#"{"n": 2, "initial": [0.1, 0.0], "schedule": [{"terms": {}, "duration": 1}]}"#;
        let e = SimulationConfig::from_json(bad).unwrap().prepare().unwrap_err();
        assert!(e.to_string().starts_with("validation failed: initial"), "{e}");
    }

    #[test]
    fn example_configs_prepare() {
        swap_config(OutputSpec::default()).prepare().unwrap();
        cubitt_config(OutputSpec::default()).prepare().unwrap();
        let cfg = swap_config(OutputSpec::default());
        assert_eq!(SimulationConfig::from_json(&cfg.to_json()).unwrap(), cfg);
    }

    #[test]
    fn schedule_hash_is_stable() {
        let a = swap_config(OutputSpec::default()).prepare().unwrap();
        let b = swap_config(cut_outputs(&["A"], true, false)).prepare().unwrap();
        let c = cubitt_config(OutputSpec::default()).prepare().unwrap();
        assert_eq!(schedule_hash(&a.schedule), schedule_hash(&b.schedule));
        assert_ne!(schedule_hash(&a.schedule), schedule_hash(&c.schedule));
        assert_eq!(schedule_hash(&a.schedule).len(), 16);
    }
}
