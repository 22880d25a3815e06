use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use metric_lines::classes::{bridges, is_biconnected, is_chordal, is_lc_member};
use metric_lines::graph::{parse_graph, to_graph6, Family, Graph};
use metric_lines::lines::line_system;
use metric_lines::metric::{apsp, diameter};
use metric_lines::verify::{
    enumerate_connected, read_graph6_file, sample_lc, verify_claims, verify_conclusion_families, verify_prop_diam3,
    verify_theorem_class_examples, verify_theorem_main,
};
use metric_lines::{Error, Result, SCHEMA};

use super::args::{
    CheckArgs, Command, EnumerateArgs, Format, GenerateArgs, InputArgs, LinesArgs, Predicate, StreamArgs, Suite,
    VerifyArgs,
};

/// 0 success, 1 mathematical finding or unusable graph, 2 usage or parse.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Disconnected
        | Error::TooFewVertices
        | Error::NoSamples
        | Error::DiameterPrecondition { .. }
        | Error::NotDiametral(..) => 1,
        _ => 2,
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Io(e.to_string())
}

fn writer(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load_input(input: &InputArgs) -> Result<Option<Vec<Graph>>> {
    if let Some(text) = &input.graph6 {
        return Ok(Some(vec![parse_graph(text)?]));
    }
    if let Some(path) = &input.file {
        return read_graph6_file(path).map(Some);
    }
    if let Some(name) = &input.family {
        let family = Family::parse(name)?;
        return Ok(Some(vec![family.build(input.k, input.parts.as_ref())?]));
    }
    Ok(None)
}

fn require_input(input: &InputArgs) -> Result<Vec<Graph>> {
    load_input(input)?.ok_or_else(|| Error::Usage("one of --graph6, --file or --family is required".into()))
}

pub fn run(command: Command) -> Result<u8> {
    match command {
        Command::Lines(args) => cmd_lines(&args),
        Command::Check(args) => cmd_check(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Enumerate(args) => cmd_enumerate(&args),
        Command::Generate(args) => cmd_generate(&args),
    }
}

fn cmd_lines(args: &LinesArgs) -> Result<u8> {
    let graphs = require_input(&args.input)?;
    let systems = graphs
        .iter()
        .map(|g| line_system(g).map(|ls| (g, ls)))
        .collect::<Result<Vec<_>>>()?;
    let mut w = writer(args.output.out.as_deref())?;
    for (g, ls) in systems {
        match args.output.format {
            Format::Json => {
                let mut value = ls.to_json();
                value["graph6"] = json!(to_graph6(g));
                writeln!(w, "{value}").map_err(io_err)?;
            }
            Format::Text => {
                writeln!(w, "graph {} n={}", to_graph6(g), g.n()).map_err(io_err)?;
                writeln!(w, "count={}, universal={}", ls.count(), ls.has_universal()).map_err(io_err)?;
                for line in ls.lines() {
                    let mark = if line.len() == g.n() { "  universal" } else { "" };
                    writeln!(w, "  {line:?}{mark}").map_err(io_err)?;
                }
            }
        }
    }
    w.flush().map_err(io_err)?;
    Ok(0)
}

fn cmd_check(args: &CheckArgs) -> Result<u8> {
    let graphs = require_input(&args.input)?;
    let mut rows = Vec::new();
    for g in &graphs {
        let mut values: Vec<(&'static str, serde_json::Value)> = Vec::new();
        for &p in &args.pred {
            let v = match p {
                Predicate::Lc => json!(is_lc_member(g)),
                Predicate::Chordal => json!(is_chordal(g)),
                Predicate::Biconnected => json!(is_biconnected(g)),
                Predicate::Bridges => json!(bridges(g).len()),
                Predicate::Diameter => json!(diameter(&apsp(g))?),
            };
            values.push((p.name(), v));
        }
        rows.push((g, values));
    }
    let mut w = writer(args.output.out.as_deref())?;
    for (g, values) in rows {
        match args.output.format {
            Format::Json => {
                let mut obj = serde_json::Map::new();
                obj.insert("schema".into(), json!(SCHEMA));
                obj.insert("graph6".into(), json!(to_graph6(g)));
                for (k, v) in values {
                    obj.insert(k.into(), v);
                }
                writeln!(w, "{}", serde_json::Value::Object(obj)).map_err(io_err)?;
            }
            Format::Text => {
                let parts: Vec<String> = values.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(w, "{}", parts.join(" ")).map_err(io_err)?;
            }
        }
    }
    w.flush().map_err(io_err)?;
    Ok(0)
}

fn load_stream(input: &InputArgs, stream: &StreamArgs) -> Result<Vec<Graph>> {
    if stream.random {
        let n = stream
            .n
            .ok_or_else(|| Error::Usage("--random needs --n".into()))?;
        return sample_lc(n, stream.p, stream.seed, stream.count);
    }
    if let Some(graphs) = load_input(input)? {
        return Ok(graphs);
    }
    match stream.n {
        Some(n) => enumerate_connected(n),
        None => Err(Error::Usage(
            "supply --n, --random, --graph6, --file or --family".into(),
        )),
    }
}

fn write_records<T: Serialize>(out: Option<&Path>, records: &[T]) -> Result<()> {
    if let Some(path) = out {
        let mut w = writer(Some(path))?;
        for r in records {
            writeln!(w, "{}", serde_json::to_string(r).expect("plain data serializes")).map_err(io_err)?;
        }
        w.flush().map_err(io_err)?;
    }
    Ok(())
}

fn print_summary<T: Serialize>(format: Format, summary: &T, text: &[String]) -> Result<()> {
    let mut w = writer(None)?;
    match format {
        Format::Json => writeln!(w, "{}", serde_json::to_string(summary).expect("plain data serializes")),
        Format::Text => text.iter().try_for_each(|l| writeln!(w, "{l}")),
    }
    .map_err(io_err)?;
    w.flush().map_err(io_err)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8> {
    let jobs = args.jobs.unwrap_or(0);
    let out = args.output.out.as_deref();
    let format = args.output.format;
    match args.suite {
        Suite::MainTheorem => {
            let graphs = load_stream(&args.input, &args.stream)?;
            let v = verify_theorem_main(&graphs, jobs);
            write_records(out, &v.exceptions)?;
            let mut text = vec![format!(
                "scanned {} connected graphs, {} in ℓC ({} out of scope)",
                v.scanned, v.lc_members, v.out_of_scope
            )];
            if v.exceptions.is_empty() {
                text.push("exceptions: none".into());
            } else {
                let list: Vec<String> = v
                    .exceptions
                    .iter()
                    .map(|e| match e.name {
                        Some(name) => format!("{name} (expected)"),
                        None => format!("{} (UNEXPECTED: {} lines on {} vertices)", e.id, e.lines, e.n),
                    })
                    .collect();
                text.push(format!("exceptions: {}", list.join(", ")));
            }
            if !v.missing.is_empty() {
                text.push(format!("missing: {}", v.missing.join(", ")));
            }
            print_summary(format, &v, &text)?;
            Ok(if v.expected_matched { 0 } else { 1 })
        }
        Suite::Diam3 => {
            let graphs = load_stream(&args.input, &args.stream)?;
            let v = verify_prop_diam3(&graphs, jobs);
            write_records(out, &v.violators)?;
            let mut text = vec![format!(
                "scanned {} connected graphs, {} in ℓC with diameter ≥ 3, {} violators",
                v.scanned,
                v.lc_diam3,
                v.violators.len()
            )];
            if !v.excluded.is_empty() {
                text.push(format!("{} non-ℓC graphs with fewer lines than vertices excluded", v.excluded.len()));
            }
            if let Some(first) = v.violators.first() {
                text.push(format!("first violator: {} ({} lines on {} vertices)", first.id, first.lines, first.n));
            }
            print_summary(format, &v, &text)?;
            Ok(if v.passed { 0 } else { 1 })
        }
        Suite::Claims => {
            let graphs = load_stream(&args.input, &args.stream)?;
            let v = verify_claims(&graphs, jobs);
            write_records(out, &v.reports)?;
            let mut text = vec![format!(
                "checked {} graphs ({} in ℓC), {} with failures",
                v.scanned, v.lc_members, v.failures
            )];
            if let Some(f) = &v.first_failure {
                text.push(format!("first failure: {} {} witness {:?}", f.id, f.property, f.witness));
            }
            print_summary(format, &v, &text)?;
            Ok(if v.passed() { 0 } else { 1 })
        }
        Suite::Families => {
            let checks = verify_conclusion_families();
            write_records(out, &checks)?;
            let text: Vec<String> = checks
                .iter()
                .map(|c| {
                    format!(
                        "{}: n={} diameter={} lines={} (expected {}) {}",
                        c.name,
                        c.n,
                        c.diameter,
                        c.lines,
                        c.expected,
                        if c.holds { "ok" } else { "MISMATCH" }
                    )
                })
                .collect();
            let all = checks.iter().all(|c| c.holds);
            print_summary(format, &json!({"schema": SCHEMA, "families": checks, "passed": all}), &text)?;
            Ok(if all { 0 } else { 1 })
        }
        Suite::TheoremClass => {
            let examples = verify_theorem_class_examples();
            write_records(out, &examples)?;
            let text: Vec<String> = examples
                .iter()
                .map(|e| {
                    format!(
                        "{}: {} lines + {} bridges {} {}",
                        e.name,
                        e.lines,
                        e.bridges,
                        if e.holds { "<" } else { "≥" },
                        e.n
                    )
                })
                .collect();
            let all = examples.iter().all(|e| e.holds);
            print_summary(format, &json!({"schema": SCHEMA, "examples": examples, "passed": all}), &text)?;
            Ok(if all { 0 } else { 1 })
        }
    }
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<u8> {
    let graphs = enumerate_connected(args.n)?;
    let ids: Vec<String> = graphs.iter().map(to_graph6).collect();
    let mut w = writer(args.out.as_deref())?;
    match args.format {
        Format::Json => {
            let doc = json!({"schema": SCHEMA, "n": args.n, "count": ids.len(), "graphs": ids});
            writeln!(w, "{doc}").map_err(io_err)?;
        }
        Format::Text => {
            for id in &ids {
                writeln!(w, "{id}").map_err(io_err)?;
            }
        }
    }
    w.flush().map_err(io_err)?;
    if args.out.is_some() {
        println!("{} graphs", ids.len());
    } else {
        eprintln!("{} graphs", ids.len());
    }
    Ok(0)
}

fn cmd_generate(args: &GenerateArgs) -> Result<u8> {
    let graphs = load_stream(&args.input, &args.stream)?;
    let mut w = writer(args.out.as_deref())?;
    for g in &graphs {
        writeln!(w, "{}", to_graph6(g)).map_err(io_err)?;
    }
    w.flush().map_err(io_err)?;
    Ok(0)
}
