use std::fs;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use mckay_core::groupfile::read_group_file;
use mckay_core::matgroup::{embed_det_inverse, scalar_extend, sl_kernel, strip_diagonal};
use mckay_core::pipeline::analyse_cover;
use mckay_core::presets::{preset_catalog, resolve};
use mckay_core::suite::{criteria, run_criterion, Workbench};
use mckay_core::{
    Analysis, CycMatrix, Error, FiniteMatrixGroup, GroupFile, NormalEmbedding, DEFAULT_MAX_ORDER,
};

use crate::args::{Cli, Command, Input, QuiverOutput};
use crate::report;

pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

pub const MAX_ORDER_VAR: &str = "MCKAY_MAX_ORDER";

fn max_order(flag: Option<usize>) -> Outcome<usize> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(MAX_ORDER_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| {
                Failure::Usage(format!(
                    "{MAX_ORDER_VAR} must be a positive integer, got `{v}`"
                ))
            }),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

/// Enumerated input group and a label for it.
fn load(input: &Input) -> Outcome<(FiniteMatrixGroup, String)> {
    let limit = max_order(input.max_order)?;
    match (&input.preset, &input.file) {
        (Some(spec), None) => {
            let (preset, inline) = resolve(spec)?;
            let params: Vec<u32> = [inline, input.n, input.dim].into_iter().flatten().collect();
            if params.len() > 1 {
                return Err(Failure::Usage(
                    "give the preset parameter once (NAME:N, --n or --dim)".into(),
                ));
            }
            let param = params.first().copied();
            Ok((preset.group(param, limit)?, preset.label(param)))
        }
        (None, Some(path)) => {
            if input.n.is_some() || input.dim.is_some() {
                return Err(Failure::Usage("--n and --dim apply to presets only".into()));
            }
            let file = read_group_file(path)?;
            let label = file
                .description
                .clone()
                .unwrap_or_else(|| path.display().to_string());
            Ok((
                FiniteMatrixGroup::enumerate(&file.generators, limit)?,
                label,
            ))
        }
        _ => Err(Failure::Usage(
            "exactly one of --preset and --file is required".into(),
        )),
    }
}

/// `-` is standard output.
fn emit(path: &str, contents: &str) -> Outcome<()> {
    if path == "-" {
        std::io::stdout()
            .write_all(contents.as_bytes())
            .map_err(|e| Error::from(e).into())
    } else {
        fs::write(path, contents).map_err(|e| Error::Io(format!("{path}: {e}")).into())
    }
}

fn uses_stdout(paths: &[&Option<String>]) -> bool {
    paths.iter().any(|p| p.as_deref() == Some("-"))
}

fn quiver_outputs(
    g: FiniteMatrixGroup,
    label: String,
    out: &QuiverOutput,
    quiet: bool,
) -> Outcome<()> {
    let (g, label) = if out.embed {
        (
            embed_det_inverse(&g).0,
            format!("det^-1 embedding of {label}"),
        )
    } else {
        (g, label)
    };
    let a = Analysis::new(g, &label)?;
    if let Some(p) = &out.json {
        emit(p, &a.quiver.to_json())?;
    }
    if let Some(p) = &out.dot {
        emit(p, &a.quiver.to_dot())?;
    }
    if !quiet && !uses_stdout(&[&out.json, &out.dot]) {
        print!("{}", report::quiver_summary(&a));
    }
    Ok(())
}

fn emit_group(path: &Option<String>, g: &FiniteMatrixGroup, label: &str) -> Outcome<()> {
    match path {
        Some(p) => emit(
            p,
            &GroupFile::from_group(g, Some(label.to_string())).to_toml(),
        ),
        None => Ok(()),
    }
}

fn subgroup(ambient: &Arc<FiniteMatrixGroup>, rule: &str) -> Outcome<NormalEmbedding> {
    let g = ambient.clone();
    Ok(match rule {
        "sl-kernel" => sl_kernel(&g),
        "trivial" => NormalEmbedding::trivial(g),
        "center" => NormalEmbedding::center(g),
        "whole" => NormalEmbedding::whole(g),
        _ => {
            if let Some(k) = rule
                .strip_prefix("cyclic")
                .and_then(|k| k.parse::<usize>().ok())
            {
                // prefer a generator of the requested order, then the least element
                let x = g
                    .generators()
                    .iter()
                    .copied()
                    .chain(0..g.order())
                    .find(|&x| g.element_order(x) == k)
                    .ok_or_else(|| {
                        Error::UnknownSubgroup(format!("{rule}: no element of order {k}"))
                    })?;
                NormalEmbedding::generated_by(g, &[x])?
            } else if let Ok((preset, param)) = resolve(rule) {
                let gens: Vec<CycMatrix> = preset.load(param)?.generators;
                NormalEmbedding::locate(g, &gens)?
            } else if Path::new(rule).is_file() {
                NormalEmbedding::locate(g, &read_group_file(Path::new(rule))?.generators)?
            } else {
                return Err(Error::UnknownSubgroup(rule.to_string()).into());
            }
        }
    })
}

fn check(out: Option<&Path>, only: Option<u32>, limit: usize) -> Outcome<()> {
    let ids: Vec<u32> = match only {
        Some(id) if criteria().iter().any(|c| c.0 == id) => vec![id],
        Some(id) => return Err(Failure::Usage(format!("no criterion {id}"))),
        None => criteria().iter().map(|c| c.0).collect(),
    };
    let mut w = Workbench::new(limit);
    let mut log = String::new();
    let mut failed = 0;
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    }
    for id in ids {
        let outcome = run_criterion(id, &mut w).expect("criterion ids come from the suite");
        let text = format!("{outcome}\n");
        print!("{text}");
        log.push_str(&text);
        failed += usize::from(!outcome.passed);
        if let Some(dir) = out {
            for a in &outcome.artifacts {
                let path = dir.join(&a.name);
                fs::write(&path, &a.contents)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
        }
    }
    let summary = if failed == 0 {
        "all criteria passed\n".to_string()
    } else {
        format!("{failed} criteria failed\n")
    };
    print!("{summary}");
    log.push_str(&summary);
    if let Some(dir) = out {
        let path = dir.join("check.log");
        fs::write(&path, log).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    if failed > 0 {
        return Err(Error::CheckFailed { failed }.into());
    }
    Ok(())
}

pub fn run(cli: Cli) -> Outcome<()> {
    match cli.command {
        Command::Quiver { input, output } => {
            let (g, label) = load(&input)?;
            quiver_outputs(g, label, &output, false)
        }
        Command::Chartab { input } => {
            let (g, label) = load(&input)?;
            print!("{}", report::chartab(&Analysis::new(g, &label)?));
            Ok(())
        }
        Command::Extend {
            input,
            scalar,
            emit_group: group_path,
            output,
        } => {
            let (n, label) = load(&input)?;
            let g = scalar_extend(&n, scalar, max_order(input.max_order)?)?;
            let label = format!("scalar_extend({label}, {scalar})");
            emit_group(&group_path, &g, &label)?;
            let quiet = group_path.as_deref() == Some("-");
            quiver_outputs(g, label, &output, quiet)
        }
        Command::Strip {
            input,
            emit_group: group_path,
            output,
        } => {
            let (g, label) = load(&input)?;
            let g = strip_diagonal(&g)?;
            let label = format!("strip_diagonal({label})");
            emit_group(&group_path, &g, &label)?;
            let quiet = group_path.as_deref() == Some("-");
            quiver_outputs(g, label, &output, quiet)
        }
        Command::Cover {
            input,
            subgroup: rule,
            json,
        } => {
            let (g, label) = load(&input)?;
            let g = Arc::new(g);
            let emb = subgroup(&g, &rule)?;
            let ca = analyse_cover(&emb, &label)?;
            let c = &ca.covering;
            if let Some(p) = &json {
                let value = serde_json::json!({
                    "pi": c.vertex_map,
                    "deck": c.deck,
                    "order": c.deck_order,
                    "verified": ca.report.is_regular(),
                });
                let mut text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
                text.push('\n');
                emit(p, &text)?;
            }
            if json.as_deref() != Some("-") {
                print!("{}", report::cover(c, &ca.report));
            }
            if !ca.report.is_regular() {
                return Err(Error::NotRegularCovering {
                    violations: ca.report.violations.len(),
                }
                .into());
            }
            Ok(())
        }
        Command::Check {
            out,
            criterion,
            max_order: limit,
        } => check(out.as_deref(), criterion, max_order(limit)?),
        Command::Presets => {
            for p in preset_catalog() {
                let name = if p.is_family() {
                    format!("{}:N", p.name)
                } else {
                    p.name.to_string()
                };
                println!("{name:<22} {}", p.description);
            }
            Ok(())
        }
    }
}
