use std::path::{Path, PathBuf};

use confplan_core::collision::{verify_path_with, DEFAULT_EPS};
use confplan_core::complexity::{cat_value, tc_value, tcn_value, SpaceQuery};
use confplan_core::config_space::{partition_of, sort_permutation};
use confplan_core::fixtures::{figure_configuration, swap_pair};
use confplan_core::ls_cover::{canonical_base, contraction_path, cover_index};
use confplan_core::planner::{approach_path, p_line, plan_multi_with, plan_with};
use confplan_core::retractions::{
    config_to_sphere, membership, sphere_to_config, GroupSpec, SpaceSpec, UnitTuple, UNIT_TOLERANCE,
};
use confplan_core::sampling::{Sampler, Spacing};
use confplan_core::svg::{export_svg, SvgOptions};
use confplan_core::{
    CollisionReport, Configuration, PiecewisePath, PlanOptions, StackStrategy, StratumId,
    TransferMode,
};
use serde::Serialize;

use crate::io::{self, Failure};
use crate::{Mode, PlanOpts, RetractMode, Strategy, TcArgs};

#[derive(Serialize)]
struct Classification {
    dim: usize,
    k: usize,
    partition: Vec<usize>,
    permutation: Vec<usize>,
    heights: Vec<f64>,
    level_count: usize,
    stratum: String,
}

fn classification(x: &Configuration) -> Classification {
    let (partition, heights) = partition_of(x);
    let order = sort_permutation(x);
    let stratum = StratumId {
        partition: partition.clone(),
        order: order.clone(),
    };
    Classification {
        dim: x.dim(),
        k: x.len(),
        partition: partition.parts().to_vec(),
        permutation: order.one_based(),
        heights: heights.as_slice().to_vec(),
        level_count: partition.levels(),
        stratum: stratum.to_string(),
    }
}

pub fn classify(path: &Path) -> Result<(), Failure> {
    let x: Configuration = io::read_json(path)?;
    io::print_json(&classification(&x));
    Ok(())
}

#[derive(Serialize)]
struct WitnessOut {
    /// 1-based.
    segment: usize,
    /// 1-based labels.
    pair: (usize, usize),
    t: f64,
    path_t: f64,
}

/// A collision report with 1-based labels and global contact times.
#[derive(Serialize)]
struct ReportOut {
    colliding: bool,
    /// `null` when fewer than two points move.
    min_clearance: Option<f64>,
    segments: usize,
    eps: f64,
    witnesses: Vec<WitnessOut>,
}

fn report_out(path: &PiecewisePath, report: &CollisionReport, eps: f64) -> ReportOut {
    let bps = path.breakpoints();
    ReportOut {
        colliding: report.colliding,
        min_clearance: report
            .min_clearance
            .is_finite()
            .then_some(report.min_clearance),
        segments: path.segment_count(),
        eps,
        witnesses: report
            .witnesses
            .iter()
            .map(|w| {
                let (a, b) = (bps[w.segment].t, bps[w.segment + 1].t);
                WitnessOut {
                    segment: w.segment + 1,
                    pair: (w.pair.0 + 1, w.pair.1 + 1),
                    t: w.t,
                    path_t: a + w.t * (b - a),
                }
            })
            .collect(),
    }
}

fn plan_options(opts: &PlanOpts) -> PlanOptions {
    PlanOptions {
        strategy: opts.strategy.map(|s| match s {
            Strategy::Distance => StackStrategy::Distance,
            Strategy::Rank => StackStrategy::Rank,
        }),
        transfer: match opts.mode {
            Mode::Sequential => TransferMode::Sequential,
            Mode::Simultaneous => TransferMode::Simultaneous,
        },
    }
}

#[derive(Serialize)]
struct StratumOut {
    partition: Vec<usize>,
    permutation: Vec<usize>,
}

impl From<&StratumId> for StratumOut {
    fn from(s: &StratumId) -> Self {
        StratumOut {
            partition: s.partition.parts().to_vec(),
            permutation: s.order.one_based(),
        }
    }
}

#[derive(Serialize)]
struct PlanSummary {
    output: PathBuf,
    domain: Option<usize>,
    strata: Vec<StratumOut>,
    line_abscissas: Vec<f64>,
    breakpoints: usize,
    report: ReportOut,
}

fn svg_options(opts: &PlanOpts, lines: Vec<f64>) -> SvgOptions {
    SvgOptions {
        projection: opts.projection,
        lines,
        ..Default::default()
    }
}

/// Writes the path and optional trace, prints path or summary, and turns a
/// colliding result into exit code 2.
fn emit_plan(
    path: &PiecewisePath,
    opts: &PlanOpts,
    domain: Option<usize>,
    strata: Vec<StratumOut>,
    lines: Vec<f64>,
) -> Result<(), Failure> {
    let eps = io::env_eps()?;
    let report = verify_path_with(path, eps)?;
    if let Some(file) = &opts.svg {
        io::write_text(file, &export_svg(path, &svg_options(opts, lines.clone()))?)?;
    }
    match &opts.output {
        Some(file) => {
            io::write_json(file, path)?;
            io::print_json(&PlanSummary {
                output: file.clone(),
                domain,
                strata,
                line_abscissas: lines,
                breakpoints: path.breakpoints().len(),
                report: report_out(path, &report, eps),
            });
        }
        None => io::print_json(path),
    }
    if report.colliding {
        eprintln!(
            "confplan: planned path collides ({} witness(es))",
            report.witnesses.len()
        );
        return Err(Failure::Collision);
    }
    Ok(())
}

pub fn plan(x: &Path, y: &Path, opts: &PlanOpts) -> Result<(), Failure> {
    let x: Configuration = io::read_json(x)?;
    let y: Configuration = io::read_json(y)?;
    let r = plan_with(&x, &y, &plan_options(opts))?;
    emit_plan(
        &r.path,
        opts,
        Some(r.domain),
        vec![(&r.strata.0).into(), (&r.strata.1).into()],
        vec![r.line_abscissas.0, r.line_abscissas.1],
    )
}

pub fn plan_multi(files: &[PathBuf], opts: &PlanOpts) -> Result<(), Failure> {
    let waypoints = files
        .iter()
        .map(|f| io::read_json(f))
        .collect::<Result<Vec<Configuration>, _>>()?;
    let path = plan_multi_with(&waypoints, &plan_options(opts))?;
    let strata = waypoints
        .iter()
        .map(|w| StratumOut {
            partition: partition_of(w).0.parts().to_vec(),
            permutation: sort_permutation(w).one_based(),
        })
        .collect();
    emit_plan(&path, opts, None, strata, Vec::new())
}

pub fn verify(file: &Path, eps: Option<f64>, csv: bool) -> Result<(), Failure> {
    let path: PiecewisePath = io::read_json(file)?;
    let eps = match eps {
        Some(e) => io::check_eps(e).map_err(Failure::Usage)?,
        None => io::env_eps()?,
    };
    let report = verify_path_with(&path, eps)?;
    let out = report_out(&path, &report, eps);
    if csv {
        io::emit("segment,i,j,t,path_t");
        for w in &out.witnesses {
            io::emit(&format!(
                "{},{},{},{},{}",
                w.segment, w.pair.0, w.pair.1, w.t, w.path_t
            ));
        }
    } else {
        io::print_json(&out);
    }
    if report.colliding {
        Err(Failure::Collision)
    } else {
        Ok(())
    }
}

#[derive(Serialize)]
#[serde(tag = "input", rename_all = "snake_case")]
enum RetractOut {
    UnitTuple {
        mode: &'static str,
        image: Configuration,
        round_trip_max_deviation: f64,
        round_trip_ok: bool,
        orbit_distinct: bool,
    },
    Configuration {
        mode: &'static str,
        image: UnitTuple,
        reembedded: Configuration,
        round_trip_max_deviation: f64,
        round_trip_ok: bool,
    },
}

pub fn retract(mode: RetractMode, dim: usize, file: &Path) -> Result<(), Failure> {
    let punctured = matches!(mode, RetractMode::Punctured);
    let mode_name = if punctured { "punctured" } else { "plain" };
    let text = io::read_text(file)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let parse_err = |e: serde_json::Error| Failure::Usage(format!("{}: {e}", file.display()));
    let check_dim = |found: usize| {
        if found == dim {
            Ok(())
        } else {
            Err(Failure::Usage(format!(
                "input has dimension {found}, --dim is {dim}"
            )))
        }
    };
    let out = if value.get("vectors").is_some() {
        let u: UnitTuple = serde_json::from_value(value).map_err(parse_err)?;
        check_dim(u.dim())?;
        let image = sphere_to_config(&u, punctured)?;
        let back = config_to_sphere(&image, punctured)?;
        let dev = u.max_deviation(&back);
        let space = SpaceSpec::new(dim, GroupSpec::FullOrthogonal, punctured, Vec::new())?;
        RetractOut::UnitTuple {
            mode: mode_name,
            orbit_distinct: membership(&image, &space),
            image,
            round_trip_max_deviation: dev,
            round_trip_ok: dev <= UNIT_TOLERANCE,
        }
    } else if value.get("points").is_some() {
        let x: Configuration = serde_json::from_value(value).map_err(parse_err)?;
        check_dim(x.dim())?;
        let image = config_to_sphere(&x, punctured)?;
        let reembedded = sphere_to_config(&image, punctured)?;
        let dev = image.max_deviation(&config_to_sphere(&reembedded, punctured)?);
        RetractOut::Configuration {
            mode: mode_name,
            image,
            reembedded,
            round_trip_max_deviation: dev,
            round_trip_ok: dev <= UNIT_TOLERANCE,
        }
    } else {
        return Err(Failure::Usage(format!(
            "{}: expected an object with \"vectors\" or \"points\"",
            file.display()
        )));
    };
    io::print_json(&out);
    Ok(())
}

#[derive(Serialize)]
struct CoverOut {
    cover_index: usize,
    k: usize,
    base: Configuration,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<ReportOut>,
}

pub fn cover(file: &Path, emit: Option<&Path>) -> Result<(), Failure> {
    let x: Configuration = io::read_json(file)?;
    let mut out = CoverOut {
        cover_index: cover_index(&x).get(),
        k: x.len(),
        base: canonical_base(x.dim(), x.len())?,
        path: None,
        report: None,
    };
    if let Some(target) = emit {
        let path = contraction_path(&x)?;
        let eps = io::env_eps()?;
        let report = verify_path_with(&path, eps)?;
        io::write_json(target, &path)?;
        out.path = Some(target.to_path_buf());
        out.report = Some(report_out(&path, &report, eps));
    }
    io::print_json(&out);
    Ok(())
}

pub fn tc(args: &TcArgs) -> Result<(), Failure> {
    let value = SpaceQuery::new(args.dim, args.k, args.r, args.group_free).and_then(|q| {
        if args.cat {
            cat_value(&q)
        } else if let Some(order) = args.order {
            tcn_value(order, &q)
        } else {
            tc_value(&q)
        }
    });
    match value.map_err(Failure::from) {
        Ok(v) => {
            io::emit(&v.to_string());
            Ok(())
        }
        Err(f @ Failure::Uncovered(_)) => {
            io::emit("uncovered");
            Err(f)
        }
        Err(f) => Err(f),
    }
}

#[derive(Serialize)]
struct PlanDemo {
    domain: usize,
    colliding: bool,
    min_clearance: Option<f64>,
    witnesses: Vec<WitnessOut>,
}

#[derive(Serialize)]
struct FigureDemo {
    classification: Classification,
    cover_index: usize,
    approach_line: f64,
    approach_targets: Vec<f64>,
    plan_to_base: PlanDemo,
}

#[derive(Serialize)]
struct SwapDemo {
    sequential: PlanDemo,
    simultaneous: PlanDemo,
}

#[derive(Serialize)]
struct RandomDemo {
    x: Configuration,
    y: Configuration,
    plan: PlanDemo,
}

#[derive(Serialize)]
struct DemoOut {
    seed: u64,
    figure: FigureDemo,
    swap: SwapDemo,
    random: RandomDemo,
}

fn demo_plan(
    x: &Configuration,
    y: &Configuration,
    transfer: TransferMode,
) -> Result<(PlanDemo, PiecewisePath, Vec<f64>), Failure> {
    let options = PlanOptions {
        strategy: None,
        transfer,
    };
    let r = plan_with(x, y, &options)?;
    let report = verify_path_with(&r.path, DEFAULT_EPS)?;
    let out = report_out(&r.path, &report, DEFAULT_EPS);
    Ok((
        PlanDemo {
            domain: r.domain,
            colliding: out.colliding,
            min_clearance: out.min_clearance,
            witnesses: out.witnesses,
        },
        r.path,
        vec![r.line_abscissas.0, r.line_abscissas.1],
    ))
}

pub fn demo(seed: u64, svg_dir: Option<&Path>) -> Result<(), Failure> {
    let mut traces: Vec<(&str, PiecewisePath, Vec<f64>)> = Vec::new();

    let fig = figure_configuration();
    let line = p_line(&fig, &fig)? + 1.0;
    let approach = approach_path(&fig, line, StackStrategy::Distance)?;
    let approach_targets = (0..fig.len()).map(|l| approach.end().height(l)).collect();
    let base = canonical_base(2, fig.len())?;
    let (plan_to_base, path, lines) = demo_plan(&fig, &base, TransferMode::Sequential)?;
    traces.push(("figure_approach", approach, vec![line]));
    traces.push(("figure_plan", path, lines));

    let (sx, sy) = swap_pair();
    let (sequential, path, lines) = demo_plan(&sx, &sy, TransferMode::Sequential)?;
    traces.push(("swap_sequential", path, lines));
    let (simultaneous, path, lines) = demo_plan(&sx, &sy, TransferMode::Simultaneous)?;
    traces.push(("swap_simultaneous", path, lines));

    let mut sampler = Sampler::new(seed);
    let spacing = Spacing::default();
    let x = sampler.configuration(2, 5, &spacing);
    let y = sampler.configuration(2, 5, &spacing);
    let (random_plan, path, lines) = demo_plan(&x, &y, TransferMode::Sequential)?;
    traces.push(("random", path, lines));

    if let Some(dir) = svg_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
        for (name, path, lines) in &traces {
            let options = SvgOptions {
                lines: lines.clone(),
                ..Default::default()
            };
            io::write_text(
                &dir.join(format!("{name}.svg")),
                &export_svg(path, &options)?,
            )?;
        }
    }

    io::print_json(&DemoOut {
        seed,
        figure: FigureDemo {
            classification: classification(&fig),
            cover_index: cover_index(&fig).get(),
            approach_line: line,
            approach_targets,
            plan_to_base,
        },
        swap: SwapDemo {
            sequential,
            simultaneous,
        },
        random: RandomDemo {
            x,
            y,
            plan: random_plan,
        },
    });
    Ok(())
}
