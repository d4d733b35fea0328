use permgraph::graph::{
    chromatic_number, clique_number, find_isomorphism, generate_all_graphs, graph6_encode, is_perfect, SimpleGraph,
    CATALOG_CAP,
};
use permgraph::grid::{
    descent_expectations, drawing_to_lettering, enumerate_descent_means, is_pmm, min_monotone_runs,
    monotone_run_drawing, GridMatrix, EXPECTATION_ENUM_CAP,
};
use permgraph::invgraph::{equivalent_permutations, inversion_graph, recognize, to_interval_system};
use permgraph::letters::{
    decode, lettericity_exact, palindromic_savings, Encoding, Lettering, LETTERICITY_CAP, LETTERICITY_K_CAP,
};
use permgraph::perm::{
    contains_pattern, descent_profile, find_interval, is_simple, lehmer_decode, lehmer_encode, LehmerCode,
};
use permgraph::permletters::{decode_perm, ell_perm_exact, universal_encoding, PermLettering, ELL_PERM_CAP};
use permgraph::prime::{edge_classes, find_chain, find_nontrivial_module, is_prime, transitive_orientations};
use permgraph::reflect::{
    apply_reflection, bfs_to_edgeless, cyclic_empty, greedy_empty, min_edge_edge_cover, nested_triangle_partition,
    Reflection, EDGE_BFS_CAP, MIXED_BFS_CAP,
};
use permgraph::{Error, Permutation};
use serde_json::json;

use crate::input::{parse_graph, parse_json, parse_perm};
use crate::{acceptance, experiment, Cli, CliError, Command, ExperimentKind, Form, Global, Report};
use crate::{GraphCmd, GridCmd, InvgraphCmd, LettersCmd, PermCmd, PermlettersCmd, PrimeCmd, ReflectCmd};

type Res = Result<Report, CliError>;

/// Operand parse failures are usage errors, except for oversized input.
fn usage(e: Error) -> CliError {
    match e {
        Error::SizeCap { .. } => CliError::Lib(e),
        other => CliError::Usage(other.to_string()),
    }
}

fn graph(s: &str) -> Result<SimpleGraph, CliError> {
    parse_graph(s).map_err(usage)
}

fn perm(s: &str) -> Result<Permutation, CliError> {
    parse_perm(s).map_err(usage)
}

impl Global {
    /// Default caps sit below the library's for the searches that blow up;
    /// `--cap-override` moves them but never past `hard`.
    fn cap(&self, what: &'static str, n: usize, soft: usize, hard: usize) -> Result<(), CliError> {
        let limit = match self.cap_override {
            Some(c) if c > hard => return Err(Error::SizeCap { what, n: c, cap: hard }.into()),
            Some(c) => c,
            None => soft,
        };
        if n > limit {
            return Err(Error::SizeCap { what, n, cap: limit }.into());
        }
        Ok(())
    }
}

fn pairs(ps: &[(usize, usize)]) -> String {
    ps.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ")
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn reflections_table(ts: &[Reflection]) -> String {
    ts.iter().map(|t| format!("{t}\n")).collect()
}

pub fn dispatch(cli: &Cli) -> Res {
    let g = &cli.global;
    match &cli.command {
        Command::Perm(c) => perm_cmd(c),
        Command::Graph(c) => graph_cmd(g, c),
        Command::Invgraph(c) => invgraph_cmd(c),
        Command::Prime(c) => prime_cmd(c),
        Command::Letters(c) => letters_cmd(g, c),
        Command::Grid(c) => grid_cmd(g, c),
        Command::Permletters(c) => permletters_cmd(g, c),
        Command::Reflect(c) => reflect_cmd(g, c),
        Command::Verify { ids } => verify(ids),
        Command::Convert { from, to, payload } => convert(*from, *to, payload),
        Command::Experiment { kind } => experiment_cmd(g, *kind),
    }
}

fn parse_code(s: &str) -> Result<LehmerCode, CliError> {
    let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    let entries: Result<Vec<usize>, _> = if inner.contains(',') {
        inner.split(',').map(|t| t.trim().parse::<usize>()).collect()
    } else {
        inner.chars().map(|c| c.to_string().parse::<usize>()).collect()
    };
    let entries = entries.map_err(|_| CliError::Usage(format!("cannot read Lehmer code {s:?}")))?;
    LehmerCode::new(entries).map_err(usage)
}

fn perm_cmd(c: &PermCmd) -> Res {
    match c {
        PermCmd::Code { perm: p } => {
            let p = perm(p)?;
            let code = lehmer_encode(&p);
            let json = json!({"perm": p, "code": code, "rank": code.rank().to_string()});
            Ok(Report::new(json, format!("{code}\nrank {}", code.rank())))
        }
        PermCmd::Decode { code } => {
            let code = parse_code(code)?;
            let p = lehmer_decode(&code);
            Ok(Report::new(json!({"code": code, "perm": p}), p.to_string()))
        }
        PermCmd::Inversions { perm: p } => {
            let p = perm(p)?;
            let inv = p.inversions();
            let json = json!({
                "perm": p, "inversions": inv, "length": p.length(), "absolute_length": p.absolute_length(),
            });
            let table = format!("length {}\nabsolute length {}\n{}", p.length(), p.absolute_length(), pairs(&inv));
            Ok(Report::new(json, table))
        }
        PermCmd::Patterns { perm: p, pattern } => {
            let (p, pat) = (perm(p)?, perm(pattern)?);
            let hit = contains_pattern(&p, &pat);
            let table = match &hit {
                Some(idx) => format!("contains {pat} as {}", list(idx)),
                None => format!("avoids {pat}"),
            };
            Ok(Report::new(json!({"perm": p, "pattern": pat, "occurrence": hit}), table))
        }
        PermCmd::Symmetries { perm: p } => {
            let p = perm(p)?;
            let class = p.symmetry_class();
            let json = json!({
                "perm": p, "inverse": p.inverse(), "reverse": p.reverse(), "complement": p.complement(),
                "reverse_complement": p.reverse_complement(), "class": class,
            });
            let table = format!(
                "inverse {}\nreverse {}\ncomplement {}\nreverse complement {}\nclass {}",
                p.inverse(),
                p.reverse(),
                p.complement(),
                p.reverse_complement(),
                class.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" ")
            );
            Ok(Report::new(json, table))
        }
        PermCmd::Stats { perm: p } => {
            let p = perm(p)?;
            let d = descent_profile(&p);
            let runs = min_monotone_runs(&p);
            let iv = find_interval(&p);
            let json = json!({
                "perm": p, "descents": d, "simple": is_simple(&p), "interval": iv,
                "cycles": p.cycles(), "monotone_runs": runs,
            });
            let mut table = format!(
                "descents {}\nsegments {}\nX_d {} X_ddd {} X_ddadd {}\nmonotone runs {runs}\nsimple {}\n",
                list(&d.descent_set),
                d.segmentation,
                d.x_d,
                d.x_ddd,
                d.x_ddadd,
                is_simple(&p)
            );
            if let Some(iv) = iv {
                table += &format!("interval [{},{}] with values {}..{}\n", iv.start, iv.end, iv.min, iv.max);
            }
            let cycles: Vec<String> = p.cycles().iter().map(|c| format!("({})", list(c))).collect();
            table += &format!("cycles {}", cycles.join(""));
            Ok(Report::new(json, table))
        }
    }
}

fn graph_cmd(glob: &Global, c: &GraphCmd) -> Res {
    match c {
        GraphCmd::Graph6 { graph: s } => {
            let g = graph(s)?;
            let code = graph6_encode(&g)?;
            Ok(Report::new(json!({"graph6": code, "graph": g}), format!("{code}\n{g}")))
        }
        GraphCmd::Iso { g, h } => {
            let (g, h) = (graph(g)?, graph(h)?);
            let map = find_isomorphism(&g, &h)?;
            let table = match &map {
                Some(m) => format!("isomorphic\nmap {}", list(m)),
                None => "not isomorphic".into(),
            };
            Ok(Report::new(json!({"isomorphic": map.is_some(), "map": map}), table))
        }
        GraphCmd::Catalog => {
            let n = glob.n.ok_or_else(|| CliError::Usage("catalog needs --n".into()))?;
            glob.cap("graph catalog", n, 6, CATALOG_CAP)?;
            let codes: Vec<String> =
                generate_all_graphs(n)?.into_iter().map(|f| graph6_encode(&f.to_graph())).collect::<Result<_, _>>()?;
            let table = format!("{} graphs on {n} vertices\n{}", codes.len(), codes.join("\n"));
            Ok(Report::new(json!({"n": n, "count": codes.len(), "graph6": codes}), table))
        }
        GraphCmd::Perfect { graph: s } => {
            let g = graph(s)?;
            let perfect = is_perfect(&g)?;
            let (omega, chi) = (clique_number(&g), chromatic_number(&g));
            let json = json!({"clique_number": omega, "chromatic_number": chi, "perfect": perfect});
            Ok(Report::new(json, format!("clique number {omega}\nchromatic number {chi}\nperfect {perfect}")))
        }
    }
}

fn invgraph_cmd(c: &InvgraphCmd) -> Res {
    match c {
        InvgraphCmd::Build { perm: p } => {
            let p = perm(p)?;
            let g = inversion_graph(&p);
            Ok(Report::new(json!({"perm": p, "graph": g}), g.to_string()))
        }
        InvgraphCmd::Recognize { graph: s } => {
            let g = graph(s)?;
            Ok(match recognize(&g)? {
                Some((p, map)) => Report::new(
                    json!({"inversion_graph": true, "perm": p, "map": map}),
                    format!("{p}\nmap {}", list(&map)),
                ),
                None => Report::new(json!({"inversion_graph": false}), "not an inversion graph"),
            })
        }
        InvgraphCmd::Equivalents { perm: p } => {
            let p = perm(p)?;
            let eq = equivalent_permutations(&p)?;
            let table = eq.iter().map(|q| format!("{q}\n")).collect::<String>();
            Ok(Report::new(json!({"perm": p, "equivalents": eq}), table))
        }
        InvgraphCmd::Intervals { perm: p } => {
            let p = perm(p)?;
            let s = to_interval_system(&p);
            Ok(Report::new(json!({"perm": p, "intervals": s}), s.to_string()))
        }
    }
}

fn prime_cmd(c: &PrimeCmd) -> Res {
    match c {
        PrimeCmd::Modules { graph: s } => {
            let g = graph(s)?;
            let m = find_nontrivial_module(&g);
            let table = match &m {
                Some(m) => format!("not prime\nmodule {}", list(m)),
                None => "prime".into(),
            };
            Ok(Report::new(json!({"prime": is_prime(&g), "module": m}), table))
        }
        PrimeCmd::Chains { graph: s, u, v, w } => {
            let g = graph(s)?;
            let chain = find_chain(&g, *u, *v, *w);
            let table = match &chain {
                Some(c) => list(c),
                None => "no chain".into(),
            };
            Ok(Report::new(json!({"chain": chain}), table))
        }
        PrimeCmd::EdgeClasses { graph: s } => {
            let g = graph(s)?;
            let p = edge_classes(&g);
            let table =
                format!("{} classes\n{}", p.len(), p.classes.iter().map(|c| pairs(c)).collect::<Vec<_>>().join("\n"));
            Ok(Report::new(json!(p), table))
        }
        PrimeCmd::Orientations { graph: s } => {
            let g = graph(s)?;
            let o = transitive_orientations(&g)?;
            let arcs = |a: &[(usize, usize)]| a.iter().map(|(x, y)| format!("{x}>{y}")).collect::<Vec<_>>().join(" ");
            let table = format!(
                "{} transitive orientations\n{}",
                o.count,
                o.orientations.iter().map(|a| arcs(a)).collect::<Vec<_>>().join("\n")
            );
            Ok(Report::new(json!(o), table))
        }
    }
}

fn encoding_report(e: &Encoding) -> Report {
    Report::new(
        json!({"k": e.lettering.k(), "encoding": e}),
        format!("{}\n{}\norder {}", e.lettering.k(), e.lettering, list(&e.order)),
    )
}

fn letters_cmd(glob: &Global, c: &LettersCmd) -> Res {
    match c {
        LettersCmd::Decode { lettering } => {
            let l: Lettering = parse_json(lettering).map_err(usage)?;
            let g = decode(&l);
            Ok(Report::new(json!({"graph": g}), g.to_string()))
        }
        LettersCmd::Lettericity { graph: s } => {
            let g = graph(s)?;
            glob.cap("lettericity", g.n(), 6, LETTERICITY_CAP)?;
            let e = lettericity_exact(&g, LETTERICITY_K_CAP)?
                .ok_or_else(|| Error::Precondition("needs more letters than the search allows".into()))?;
            Ok(encoding_report(&e))
        }
        LettersCmd::Savings { graph: s } => {
            let g = graph(s)?;
            let (h, e) = palindromic_savings(&g)?;
            let mut r = encoding_report(&e);
            r.json["inner"] = json!(h);
            Ok(r)
        }
    }
}

fn grid_cmd(glob: &Global, c: &GridCmd) -> Res {
    match c {
        GridCmd::Pmm { matrix } => {
            let m: GridMatrix = if matrix.trim_start().starts_with('[') {
                let rows: Vec<Vec<i8>> = parse_json(matrix).map_err(usage)?;
                let refs: Vec<&[i8]> = rows.iter().map(Vec::as_slice).collect();
                GridMatrix::from_printed(&refs).map_err(usage)?
            } else {
                parse_json(matrix).map_err(usage)?
            };
            let signs = is_pmm(&m);
            let table = match &signs {
                Some(s) => format!(
                    "columns {}\nrows {}",
                    s.columns.iter().map(|x| format!("{x:+}")).collect::<Vec<_>>().join(" "),
                    s.rows.iter().map(|x| format!("{x:+}")).collect::<Vec<_>>().join(" ")
                ),
                None => "not a partial multiplication matrix".into(),
            };
            Ok(Report::new(json!({"pmm": signs.is_some(), "signs": signs}), table))
        }
        GridCmd::Draw { perm: p } => {
            let d = monotone_run_drawing(&perm(p)?);
            let cells: Vec<String> = d.cell_of.iter().map(|(c, r)| format!("({c},{r})")).collect();
            let table = format!("{}\ncells {}\nreading order {}", d.matrix, cells.join(" "), d.reading_order);
            Ok(Report::new(json!(d), table))
        }
        GridCmd::Lettering { perm: p } => {
            let e = drawing_to_lettering(&monotone_run_drawing(&perm(p)?))?;
            Ok(encoding_report(&e))
        }
        GridCmd::Runs { perm: p } => {
            let p = perm(p)?;
            let d = descent_profile(&p);
            let runs = min_monotone_runs(&p);
            let bound = 1 + d.x_d - d.x_ddd - d.x_ddadd;
            let json = json!({"perm": p, "monotone_runs": runs, "descent_bound": bound});
            Ok(Report::new(json, format!("{runs}\nbound {bound}")))
        }
        GridCmd::Expectations => {
            let n = glob.n.unwrap_or(7);
            let closed = descent_expectations(n)?;
            let exact = if n <= EXPECTATION_ENUM_CAP { Some(enumerate_descent_means(n)?.1) } else { None };
            let json = json!({
                "n": n,
                "x_d": closed.x_d.to_string(),
                "x_ddd": closed.x_ddd.to_string(),
                "x_ddadd": closed.x_ddadd.to_string(),
                "bound": closed.bound.to_string(),
                "x_r": exact.map(|r| r.to_string()),
            });
            let mut table = format!(
                "E[X_d] {}\nE[X_ddd] {}\nE[X_ddadd] {}\nbound {}",
                closed.x_d, closed.x_ddd, closed.x_ddadd, closed.bound
            );
            if let Some(r) = exact {
                table += &format!("\nE[X_r] {r}");
            }
            Ok(Report::new(json, table))
        }
    }
}

fn perm_lettering_report(l: &PermLettering) -> Report {
    let inv: Vec<(usize, usize)> = l.inversion_decoder().collect();
    let non: Vec<(usize, usize)> = l.noninversion_decoder().collect();
    let table = format!("{}\nword {}\nhost {}\nI {}\nN {}", l.k(), list(l.word()), l.host(), pairs(&inv), pairs(&non));
    Report::new(json!(l), table)
}

fn permletters_cmd(glob: &Global, c: &PermlettersCmd) -> Res {
    match c {
        PermlettersCmd::Decode { lettering } => {
            let l: PermLettering = parse_json(lettering).map_err(usage)?;
            let g = decode_perm(&l);
            Ok(Report::new(json!({"graph": g}), g.to_string()))
        }
        PermlettersCmd::Ellperm { graph: s } => {
            let g = graph(s)?;
            glob.cap("permutation lettericity", g.n(), ELL_PERM_CAP, ELL_PERM_CAP)?;
            let e = ell_perm_exact(&g)?;
            let mut r = perm_lettering_report(&e.lettering);
            r.json = json!({"k": e.lettering.k(), "encoding": e});
            r.table += &format!("\norder {}", list(&e.order));
            Ok(r)
        }
        PermlettersCmd::Universal { graph: s } => Ok(perm_lettering_report(&universal_encoding(&graph(s)?)?)),
    }
}

fn reflect_cmd(glob: &Global, c: &ReflectCmd) -> Res {
    match c {
        ReflectCmd::Apply { graph: s, reflection } => {
            let g = graph(s)?;
            let t: Reflection = parse_json(reflection).map_err(usage)?;
            let h = apply_reflection(&g, &t)?;
            Ok(Report::new(json!({"graph": h}), h.to_string()))
        }
        ReflectCmd::Bfs { graph: s, mixed } => {
            let g = graph(s)?;
            if *mixed {
                glob.cap("mixed reflection distance", g.n(), 6, MIXED_BFS_CAP)?;
            } else {
                glob.cap("edge reflection distance", g.n(), EDGE_BFS_CAP, EDGE_BFS_CAP)?;
            }
            let (d, ts) = bfs_to_edgeless(&g, *mixed)?;
            Ok(Report::new(json!({"distance": d, "reflections": ts}), format!("{d}\n{}", reflections_table(&ts))))
        }
        ReflectCmd::Greedy { graph: s } => {
            let ts = greedy_empty(&graph(s)?);
            Ok(Report::new(
                json!({"length": ts.len(), "reflections": ts}),
                format!("{}\n{}", ts.len(), reflections_table(&ts)),
            ))
        }
        ReflectCmd::Cyclic { graph: s } => {
            let e = cyclic_empty(&graph(s)?)?;
            let table = format!(
                "{}\ncycle {}\nk {} bound {}\n{}",
                e.reflections.len(),
                list(&e.cycle),
                e.k,
                e.bound,
                reflections_table(&e.reflections)
            );
            Ok(Report::new(json!(e), table))
        }
        ReflectCmd::Cover { graph: s } => {
            let c = min_edge_edge_cover(&graph(s)?)?;
            Ok(Report::new(json!({"cover": c}), c.to_string()))
        }
        ReflectCmd::Nested { graph: s } => {
            let p = nested_triangle_partition(&graph(s)?)?;
            Ok(Report::new(json!(p), format!("{}\n{}", p.bound, reflections_table(&p.reflections()))))
        }
    }
}

fn verify(ids: &[usize]) -> Res {
    let n = acceptance::CRITERIA.len();
    if let Some(bad) = ids.iter().find(|&&i| i == 0 || i > n) {
        return Err(CliError::Usage(format!("no criterion {bad}; they run 1..={n}")));
    }
    let outcomes =
        if ids.is_empty() { acceptance::run_all() } else { ids.iter().map(|&i| acceptance::run_one(i)).collect() };
    let table: String = outcomes.iter().map(|o| o.line() + "\n").collect();
    let mut r = Report::new(json!(outcomes), table);
    if outcomes.iter().any(|o| !o.pass) {
        r.code = 1;
    }
    Ok(r)
}

fn convert(from: Form, to: Form, payload: &str) -> Res {
    let is_perm = |f: Form| matches!(f, Form::Perm | Form::PermJson);
    if is_perm(from) != is_perm(to) {
        return Err(CliError::Usage("cannot convert between permutations and graphs".into()));
    }
    let text = match from {
        Form::Perm | Form::PermJson => {
            let p: Permutation =
                if from == Form::Perm { payload.trim().parse() } else { parse_json(payload) }.map_err(usage)?;
            match to {
                Form::Perm => p.to_string(),
                _ => serde_json::to_string(&p).expect("permutations serialise"),
            }
        }
        Form::Graph6 | Form::GraphJson => {
            let g: SimpleGraph = if from == Form::Graph6 {
                permgraph::graph::graph6_decode(payload.trim())
            } else {
                parse_json(payload)
            }
            .map_err(usage)?;
            match to {
                Form::Graph6 => graph6_encode(&g)?,
                _ => serde_json::to_string(&g).expect("graphs serialise"),
            }
        }
    };
    let json: serde_json::Value = serde_json::from_str(&text).unwrap_or_else(|_| json!(text));
    Ok(Report::new(json, text))
}

fn experiment_cmd(glob: &Global, kind: ExperimentKind) -> Res {
    let n = glob.n.unwrap_or(7);
    let seed = glob.seed;
    let r = match kind {
        ExperimentKind::RandomLettericity => {
            glob.cap("random lettericity", n, 6, LETTERICITY_CAP)?;
            experiment::random_lettericity(n, glob.samples.unwrap_or(100), seed)?
        }
        ExperimentKind::ThreeSameLetter => {
            glob.cap("three-same-letter experiment", n, 20, experiment::EXPERIMENT_CAP)?;
            experiment::three_same_letter(n, glob.samples.unwrap_or(1000), seed)?
        }
        ExperimentKind::SeparatedPairs => {
            glob.cap("separated-pairs experiment", n, 20, experiment::EXPERIMENT_CAP)?;
            experiment::separated_pairs(n, glob.samples.unwrap_or(1000), seed)?
        }
        ExperimentKind::MonotoneRuns => {
            glob.cap("monotone-runs experiment", n, 20, experiment::EXPERIMENT_CAP)?;
            experiment::monotone_runs(n, glob.samples.unwrap_or(1000), seed)?
        }
    };
    let table: String = r
        .as_object()
        .expect("reports are objects")
        .iter()
        .map(|(k, v)| match v {
            serde_json::Value::String(s) => format!("{k} {s}\n"),
            other => format!("{k} {other}\n"),
        })
        .collect();
    Ok(Report::new(r, table))
}
