//! One function per verb. Each returns `Ok(true)` on full success and
//! `Ok(false)` when a requested check did not hold.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use cala::layout::{verify_no_swap, CouplingMap, Placement};
use cala::library::{compare, AuxGate, LibraryGate, SpGate, ThetaGate};
use cala::report::{all_tables, ReferenceValues};
use cala::rules::{search, SearchQuery};
use cala::sim::{apply, phase_trace, qsphere, ControlState, EquivalenceLevel, Statevector, TruthTable};
use cala::transpile::{cost_report, lower, peephole, route_naive, NamedCost, NativeBasis};
use cala::{emit_text, parse_text, Circuit};
use serde_json::json;

use crate::Command;

pub fn run(command: Command) -> Result<bool> {
    match command {
        Command::Build { gate, output } => build(&gate, output.as_deref()),
        Command::Transpile { file, basis, peephole, output } => transpile(&file, &basis, peephole, output.as_deref()),
        Command::Simulate { file, input, qsphere, json } => simulate(&file, &input, qsphere, json),
        Command::Verify { gate, against, level, truth } => {
            verify(&gate, against.as_deref(), level.as_deref(), truth.as_deref())
        }
        Command::Search { target, symmetric, theta_set, sp_set, ax1_set, ax2_set, json } => {
            search_cmd(&target, symmetric, &theta_set, &sp_set, &ax1_set, &ax2_set, json)
        }
        Command::Cost { gate, basis, layout, placement, json } => {
            cost(&gate, &basis, layout.as_deref().zip(placement.as_deref()), json)
        }
        Command::Trace { gate, controls, json } => trace(&gate, &controls, json),
        Command::Tables { output, json, reference } => tables(output.as_deref(), json, reference.as_deref()),
    }
}

fn gate(name: &str) -> Result<LibraryGate> {
    Ok(LibraryGate::by_name(name)?)
}

fn basis(s: &str) -> Result<NativeBasis> {
    s.parse().map_err(|e: String| anyhow!(e))
}

fn write_or_print(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_circuit(path: &Path) -> Result<Circuit> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_text(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_list<T: std::str::FromStr<Err = String>>(items: &[String], what: &str) -> Result<Vec<T>> {
    items.iter().map(|s| s.parse::<T>().map_err(|e| anyhow!("{what}: {e}"))).collect()
}

fn truth(s: &str) -> Result<TruthTable> {
    TruthTable::parse(s)
        .ok_or_else(|| anyhow!("`{s}` is not a truth string (expected 0/1 characters, length a power of two)"))
}

fn build(name: &str, output: Option<&Path>) -> Result<bool> {
    let circuit = gate(name)?.build();
    write_or_print(&emit_text(&circuit), output)?;
    Ok(true)
}

fn transpile(file: &Path, basis_name: &str, run_peephole: bool, output: Option<&Path>) -> Result<bool> {
    let basis = basis(basis_name)?;
    let circuit = read_circuit(file)?;
    let mut lowered = lower(&circuit, basis)?;
    if run_peephole {
        lowered = peephole(&lowered);
    }
    write_or_print(&emit_text(&lowered), output)?;
    Ok(true)
}

fn simulate(file: &Path, input: &str, as_qsphere: bool, json: bool) -> Result<bool> {
    let circuit = read_circuit(file)?;
    if input.len() != circuit.width() {
        bail!("input has {} bits but the circuit has {} qubits", input.len(), circuit.width());
    }
    let out = apply(&circuit, &Statevector::from_bitstring(input)?)?;
    let n = circuit.width();
    if as_qsphere {
        let order: Vec<usize> = (0..n).rev().collect();
        let points = qsphere(&out, &order);
        if json {
            println!("{}", serde_json::to_string_pretty(&points)?);
        } else {
            for p in points {
                println!("{}  magnitude {:.6}  phase {:.6}", p.basis_label, p.magnitude, p.phase);
            }
        }
        return Ok(true);
    }
    let rows: Vec<_> = out
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > 1e-12)
        .map(|(i, a)| (format!("{i:0n$b}"), a.re, a.im, a.norm_sqr()))
        .collect();
    if json {
        let v: Vec<_> =
            rows.iter().map(|(b, re, im, p)| json!({"basis": b, "re": re, "im": im, "probability": p})).collect();
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        for (b, re, im, p) in rows {
            println!("|{b}⟩  {re:+.6} {im:+.6}i  p={p:.6}");
        }
    }
    Ok(true)
}

fn verify(name: &str, against: Option<&str>, level: Option<&str>, truth_str: Option<&str>) -> Result<bool> {
    let g = gate(name)?;
    let circuit = g.build();
    let mut ok = true;
    if let Some(oracle_name) = against {
        let wanted: EquivalenceLevel = level.unwrap_or("L1").parse().map_err(|e: String| anyhow!(e))?;
        let oracle = gate(oracle_name)?.build();
        let cmp = compare(&circuit, &oracle)?;
        let achieved = cmp.effective_level();
        println!("{name} vs {oracle_name}: {achieved} (requested {wanted})");
        if cmp.level == EquivalenceLevel::None && cmp.clean_ancilla_l3 {
            println!("agreement holds on clean-ancilla inputs only");
        }
        ok &= achieved >= wanted;
    }
    let function = g.boolean_function();
    if let Some(tt) = &function {
        println!("truth table: {tt}");
    }
    if let Some(s) = truth_str {
        let want = truth(s)?;
        let got = function.ok_or_else(|| anyhow!("{name} does not compute a Boolean function on a single target"))?;
        let matches = got == want;
        println!("expected {}: {}", want.to_bit_string(), if matches { "match" } else { "mismatch" });
        ok &= matches;
    }
    Ok(ok)
}

fn search_cmd(
    target: &str,
    symmetric: bool,
    theta: &[String],
    sp: &[String],
    ax1: &[String],
    ax2: &[String],
    json: bool,
) -> Result<bool> {
    let query = SearchQuery {
        target: truth(target)?,
        sp_set: parse_list::<SpGate>(sp, "sp-set")?,
        ax1_set: parse_list::<AuxGate>(ax1, "ax1-set")?,
        ax2_set: parse_list::<AuxGate>(ax2, "ax2-set")?,
        theta_set: parse_list::<ThetaGate>(theta, "theta-set")?,
        symmetric,
    };
    let result = search(&query)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&json!({"visited": result.visited, "hits": result.hits}))?);
    } else {
        println!("visited {} configurations, {} hits", result.visited, result.hits.len());
        for hit in &result.hits {
            println!("{}  {}", hit.spec, hit.level);
        }
    }
    Ok(true)
}

fn cost(name: &str, basis_name: &str, layout: Option<(&Path, &Path)>, json: bool) -> Result<bool> {
    let basis = basis(basis_name)?;
    let circuit = gate(name)?.build();
    let Some((map_path, placement_path)) = layout else {
        let named = NamedCost::new(name, basis, cost_report(&circuit, basis)?);
        if json {
            println!("{}", serde_json::to_string_pretty(&named)?);
        } else {
            println!("{name} [{basis}] {}", cost_report(&circuit, basis)?);
        }
        return Ok(true);
    };
    let map = CouplingMap::load(map_path).with_context(|| format!("loading {}", map_path.display()))?;
    let placement = Placement::load(placement_path).with_context(|| format!("loading {}", placement_path.display()))?;
    let physical = placement.physical(&circuit, &map)?;
    let violations = verify_no_swap(&circuit, &placement, &map)?;
    let routed = route_naive(&circuit, &map, &physical, false)?;
    let report = cost_report(&routed.circuit, basis)?;
    let named = NamedCost::new(name, basis, report.clone());
    if json {
        let mut v = serde_json::to_value(&named)?;
        v["swaps"] = json!(routed.swaps);
        v["violations"] = json!(violations);
        v["final_layout"] = json!(routed.final_layout);
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("{name} [{basis}] on {}: {report}", map.name());
        println!("adjacency violations: {}, swaps inserted: {}", violations.len(), routed.swaps);
        for v in &violations {
            println!("  gate {}: {} on ({}, {})", v.index, v.gate, v.physical[0], v.physical[1]);
        }
    }
    Ok(true)
}

fn trace(name: &str, controls: &str, json: bool) -> Result<bool> {
    let LibraryGate::Boolean(kind) = gate(name)? else {
        bail!("trace needs a 3-bit Boolean gate (and3, nand3, or3, nor3, imp3, inh3)");
    };
    let state = ControlState::from_dirac(controls).ok_or_else(|| anyhow!("--controls takes two bits, e.g. 10"))?;
    let labels = phase_trace(&kind.spec(), state)?;
    let stages = cala::library::core::STAGE_NAMES;
    if json {
        let v: Vec<_> = stages.iter().zip(&labels).map(|(s, l)| json!({"stage": s, "state": l.to_string()})).collect();
        println!("{}", serde_json::to_string_pretty(&json!({"gate": name, "controls": state.dirac(), "trace": v}))?);
    } else {
        println!("{name} with |c2 c1⟩ = {}", state.dirac());
        for (s, l) in stages.iter().zip(&labels) {
            println!("{s:<6} {l}");
        }
    }
    Ok(true)
}

fn tables(output: Option<&Path>, json: bool, reference: Option<&Path>) -> Result<bool> {
    let reference = match reference {
        Some(p) => {
            ReferenceValues::from_json(&fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?)?
        }
        None => ReferenceValues::bundled(),
    };
    let tables = all_tables(&reference)?;
    let text: String = tables.iter().map(|t| format!("{t}\n")).collect();
    let json_text = serde_json::to_string_pretty(&tables)?;
    let failed: Vec<String> = tables
        .iter()
        .flat_map(|t| t.failures().filter(|c| c.blocking).map(move |c| format!("{}: {} {}", t.id, c.row, c.column)))
        .collect();
    match output {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            fs::write(dir.join("tables.txt"), &text)?;
            fs::write(dir.join("tables.json"), json_text + "\n")?;
            println!("wrote {}", dir.display());
        }
        None if json => println!("{json_text}"),
        None => print!("{text}"),
    }
    if !failed.is_empty() {
        eprintln!("{} blocking cell(s) failed:", failed.len());
        for f in &failed {
            eprintln!("  {f}");
        }
    }
    Ok(failed.is_empty())
}
