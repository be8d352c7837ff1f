use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lrw_core::classical::{branch_schur, d_coefficient_in, to_schur, w_decomp, w_tensor_check, Group};
use lrw_core::fermionic::{fermionic_decomp, fermionic_multiplicity, parse_factors};
use lrw_core::lie::LieSpec;
use lrw_core::looproot::{beta_roots, commute_check, cone_membership, type_a_support};
use lrw_core::partition::{partition_from_weight, weight_from_partition};
use lrw_core::schur::{h_monomial_to_schur, jacobi_trudi, mult, skew_schur_expand};
use lrw_core::tableaux::{count_lr_tableaux, enumerate_lr_tableaux, lr_coefficient, SkewShape};
use lrw_core::{DominantWeight, Expansion, Partition, RootLatticeElement};
use lrwkit::config::{Config, DEFAULT_MAX_BOXES};
use lrwkit::verify::{run_verify_suite, Level, Status};

#[derive(Parser)]
#[command(name = "lrwkit", version, about = "Symmetric functions, LR tableaux and W_Sp / W_O decompositions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Refuse inputs with more boxes than this.
    #[arg(long, global = true, env = "LRWKIT_MAX_BOXES")]
    max_boxes: Option<usize>,
    /// TOML file with `max_boxes` and `format` defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Partition data; a weight such as `1,2,1@rank=3` is converted first.
    Part {
        input: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    #[command(subcommand)]
    Schur(SchurCmd),
    /// LR coefficient c^λ_{μν}, optionally listing the tableaux.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        #[arg(long)]
        tableaux: bool,
    },
    /// s_λ in the sp / o basis, or a sp / o basis element in Schur functions.
    Branch {
        lambda: Partition,
        #[arg(long, value_parser = parse_group)]
        to: Group,
        #[arg(long)]
        inverse: bool,
    },
    /// Structure constant d^λ_{μν} of the universal characters.
    Dcoef {
        mu: Partition,
        nu: Partition,
        lambda: Partition,
        #[arg(long, value_parser = parse_group, default_value = "sp")]
        group: Group,
    },
    /// Irreducible decomposition of W_Sp(λ) or W_O(λ).
    Wdecomp {
        lambda: Partition,
        #[arg(long, value_parser = parse_group)]
        family: Group,
    },
    /// Both sides of the tensor identity for W(μ) ⊗ W(ν).
    Wtensor {
        mu: Partition,
        nu: Partition,
        #[arg(long, value_parser = parse_group)]
        family: Group,
    },
    /// Fermionic decomposition of a product of rectangles, e.g. `B3 1x2,2x1`.
    Fermionic {
        spec: LieSpec,
        factors: String,
        /// Only this weight, e.g. `0,1,0@rank=3`.
        #[arg(long)]
        weight: Option<DominantWeight>,
    },
    #[command(subcommand)]
    Roots(RootsCmd),
    /// Run the worked-example suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum SchurCmd {
    Mult { mu: Partition, nu: Partition },
    Skew { lambda: Partition, nu: Partition },
    /// Jacobi-Trudi determinant of s_{λ/ν}.
    Jt {
        lambda: Partition,
        #[arg(default_value = "")]
        nu: Partition,
    },
}

#[derive(Subcommand)]
enum RootsCmd {
    Beta { spec: LieSpec },
    Commute { spec: LieSpec },
    /// Expressions of a root-lattice element as a sum of β roots.
    Cone {
        spec: LieSpec,
        /// Simple-root coordinates, e.g. `1,2,2,1,1`.
        #[arg(long, conflicts_with_all = ["from", "to"])]
        diff: Option<String>,
        /// Use `from − to` with weights given as comma-separated coefficients.
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
    },
    /// Whether the support of η spans a type-A sub-diagram.
    TypeA { spec: LieSpec, eta: String },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "quick")]
    level: Level,
    /// Also write the full report as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_group(s: &str) -> Result<Group, String> {
    s.parse().map_err(|e: lrw_core::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Cap(String),
    Check,
}

impl From<lrw_core::Error> for Failure {
    fn from(e: lrw_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Out {
    format: Format,
    max_boxes: usize,
}

impl Out {
    fn cap(&self, boxes: usize) -> Result<(), Failure> {
        if boxes > self.max_boxes {
            return Err(Failure::Cap(format!(
                "input has {boxes} boxes, limit is {} (raise with --max-boxes)",
                self.max_boxes
            )));
        }
        Ok(())
    }

    fn emit(&self, value: &Value, header: &[&str], rows: Vec<Vec<String>>) {
        match self.format {
            Format::Json => println!("{value}"),
            Format::Tsv => {
                println!("{}", header.join("\t"));
                for r in rows {
                    println!("{}", r.join("\t"));
                }
            }
        }
    }
}

fn parts(p: &Partition) -> String {
    p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn ints<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn expansion_rows(e: &Expansion) -> Vec<Vec<String>> {
    e.sorted_terms().into_iter().map(|(k, c)| vec![parts(k), c.to_string()]).collect()
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("bad integer {t:?} in {s:?}"))))
        .collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(Failure::Usage)?,
        None => Config::default(),
    };
    let format = match (cli.format, config.format.as_deref()) {
        (Some(f), _) => f,
        (None, Some(s)) => Format::from_str(s, true).map_err(|_| Failure::Usage(format!("unknown format {s:?}")))?,
        (None, None) => Format::Json,
    };
    let out = Out {
        format,
        max_boxes: cli.max_boxes.or(config.max_boxes).unwrap_or(DEFAULT_MAX_BOXES),
    };

    match cli.cmd {
        Cmd::Part { input, rank } => {
            let (p, rank) = if input.contains('@') {
                let w: DominantWeight = input.parse()?;
                (partition_from_weight(&w), Some(w.rank()))
            } else {
                (input.parse::<Partition>()?, rank)
            };
            let weight = rank.map(|r| weight_from_partition(&p, r)).transpose()?;
            let conj = p.conjugate();
            let mut rows = vec![
                vec!["partition".into(), parts(&p)],
                vec!["size".into(), p.size().to_string()],
                vec!["conjugate".into(), parts(&conj)],
            ];
            if let Some(w) = &weight {
                rows.push(vec!["weight".into(), ints(w.coeffs())]);
            }
            let value = json!({"partition": p, "size": p.size(), "conjugate": conj, "weight": weight});
            out.emit(&value, &["field", "value"], rows);
        }
        Cmd::Schur(SchurCmd::Mult { mu, nu }) => {
            out.cap(mu.size() + nu.size())?;
            let e = mult(&Expansion::schur(mu.clone()), &Expansion::schur(nu.clone()))?;
            let value = json!({"op": "mult", "mu": mu, "nu": nu, "terms": e});
            out.emit(&value, &["partition", "coeff"], expansion_rows(&e));
        }
        Cmd::Schur(SchurCmd::Skew { lambda, nu }) => {
            out.cap(lambda.size())?;
            let e = skew_schur_expand(&lambda, &nu);
            let value = json!({"op": "skew", "lambda": lambda, "nu": nu, "terms": e});
            out.emit(&value, &["partition", "coeff"], expansion_rows(&e));
        }
        Cmd::Schur(SchurCmd::Jt { lambda, nu }) => {
            out.cap(lambda.size())?;
            let h = jacobi_trudi(&lambda, &nu);
            let s = h_monomial_to_schur(&h)?;
            let mut rows: Vec<Vec<String>> = Vec::new();
            for (basis, e) in [("h", &h), ("s", &s)] {
                rows.extend(expansion_rows(e).into_iter().map(|mut r| {
                    r.insert(0, basis.to_string());
                    r
                }));
            }
            let value = json!({"op": "jt", "lambda": lambda, "nu": nu, "h": h, "schur": s});
            out.emit(&value, &["basis", "partition", "coeff"], rows);
        }
        Cmd::Lr { lambda, mu, nu, tableaux } => {
            out.cap(lambda.size())?;
            let c = lr_coefficient(&lambda, &mu, &nu);
            let mut value = json!({"lambda": lambda, "mu": mu, "nu": nu, "coefficient": c});
            let mut rows = vec![vec![parts(&lambda), parts(&mu), parts(&nu), c.to_string()]];
            if tableaux {
                let list: Vec<Vec<Vec<u32>>> = match SkewShape::new(lambda.clone(), mu.clone()) {
                    Some(shape) => enumerate_lr_tableaux(&shape)
                        .into_iter()
                        .filter(|t| t.content().ok().as_ref() == Some(&nu))
                        .map(|t| t.rows().to_vec())
                        .collect(),
                    None => Vec::new(),
                };
                debug_assert_eq!(
                    list.len() as u64,
                    SkewShape::new(lambda.clone(), mu.clone()).map_or(0, |s| count_lr_tableaux(&s, &nu))
                );
                rows = list
                    .iter()
                    .map(|t| {
                        let rs: Vec<String> = t.iter().map(|r| ints(r)).collect();
                        vec![parts(&lambda), parts(&mu), parts(&nu), rs.join("/")]
                    })
                    .collect();
                value["tableaux"] = json!(list);
            }
            let last = if tableaux { "tableau" } else { "coefficient" };
            out.emit(&value, &["lambda", "mu", "nu", last], rows);
        }
        Cmd::Branch { lambda, to, inverse } => {
            out.cap(lambda.size())?;
            let e = if inverse {
                to_schur(&Expansion::basis_element(to.basis(), lambda.clone()))?
            } else {
                branch_schur(&lambda, to)
            };
            let value = json!({"lambda": lambda, "group": to, "inverse": inverse, "terms": e});
            out.emit(&value, &["partition", "coeff"], expansion_rows(&e));
        }
        Cmd::Dcoef { mu, nu, lambda, group } => {
            out.cap(mu.size() + nu.size())?;
            let d = d_coefficient_in(group, &mu, &nu, &lambda);
            let value = json!({"mu": mu, "nu": nu, "lambda": lambda, "group": group, "d": d});
            out.emit(&value, &["mu", "nu", "lambda", "d"], vec![vec![parts(&mu), parts(&nu), parts(&lambda), d.to_string()]]);
        }
        Cmd::Wdecomp { lambda, family } => {
            out.cap(lambda.size())?;
            let w = w_decomp(&lambda, family);
            let rows = w.sorted_terms().into_iter().map(|(k, m)| vec![parts(k), m.to_string()]).collect();
            out.emit(&serde_json::to_value(&w).expect("serialisable"), &["partition", "mult"], rows);
        }
        Cmd::Wtensor { mu, nu, family } => {
            out.cap(mu.size() + nu.size())?;
            let (lhs, rhs) = w_tensor_check(&mu, &nu, family);
            let equal = lhs == rhs;
            let mut keys: Vec<&Partition> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
            keys.sort_by(|a, b| a.graded_desc_cmp(b));
            keys.dedup();
            let rows = keys
                .into_iter()
                .map(|k| vec![parts(k), lhs.coeff(k).to_string(), rhs.coeff(k).to_string()])
                .collect();
            let value = json!({"family": family, "mu": mu, "nu": nu, "lhs": lhs, "rhs": rhs, "equal": equal});
            out.emit(&value, &["partition", "lhs", "rhs"], rows);
            if !equal {
                return Err(Failure::Check);
            }
        }
        Cmd::Fermionic { spec, factors, weight } => {
            let f = parse_factors(&spec, &factors)?;
            out.cap(f.top_weight(spec.rank()).to_partition().size())?;
            match weight {
                Some(w) => {
                    if w.rank() != spec.rank() {
                        return Err(Failure::Usage(format!("weight has rank {}, algebra has rank {}", w.rank(), spec.rank())));
                    }
                    let m = fermionic_multiplicity(&spec, &f, &w)?;
                    let value = json!({"spec": spec.to_string(), "factors": factors, "weight": w, "multiplicity": m.to_string()});
                    out.emit(&value, &["weight", "mult"], vec![vec![ints(w.coeffs()), m.to_string()]]);
                }
                None => {
                    let d = fermionic_decomp(&spec, &f);
                    let terms: Vec<Value> = d.iter().map(|(w, m)| json!({"weight": w, "mult": m.to_string()})).collect();
                    let rows = d.iter().map(|(w, m)| vec![ints(w.coeffs()), m.to_string()]).collect();
                    let value = json!({"spec": spec.to_string(), "factors": factors, "terms": terms});
                    out.emit(&value, &["weight", "mult"], rows);
                }
            }
        }
        Cmd::Roots(RootsCmd::Beta { spec }) => {
            let b = beta_roots(&spec)?;
            let entries = b.entries();
            let rows = entries
                .iter()
                .enumerate()
                .map(|(i, e)| vec![(i + 1).to_string(), format!("{},{}", e.k, e.l), ints(&e.root), ints(&e.weight)])
                .collect();
            let value = json!({"spec": spec.to_string(), "classical_n": b.classical_n(), "count": b.len(), "betas": entries});
            out.emit(&value, &["index", "label", "root", "weight"], rows);
        }
        Cmd::Roots(RootsCmd::Commute { spec }) => {
            let rep = commute_check(&spec)?;
            let rows = rep
                .violations
                .iter()
                .map(|v| {
                    let opt = |x: Option<usize>| x.map_or("-".to_string(), |x| x.to_string());
                    vec![v.rule.to_string(), v.r.to_string(), opt(v.s), opt(v.node), ints(&v.root)]
                })
                .collect();
            out.emit(&serde_json::to_value(&rep).expect("serialisable"), &["rule", "r", "s", "node", "root"], rows);
            if !rep.ok() {
                return Err(Failure::Check);
            }
        }
        Cmd::Roots(RootsCmd::Cone { spec, diff, from, to }) => {
            let diff = match (diff, from, to) {
                (Some(d), _, _) => RootLatticeElement::new(parse_ints(&d)?),
                (None, Some(a), Some(b)) => {
                    let (a, b) = (parse_ints(&a)?, parse_ints(&b)?);
                    if a.len() != spec.rank() || b.len() != spec.rank() {
                        return Err(Failure::Usage(format!("weights must have {} coordinates", spec.rank())));
                    }
                    let w: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
                    spec.weight_to_root_integral(&w)
                        .ok_or_else(|| Failure::Usage("difference is not in the root lattice".into()))?
                }
                _ => return Err(Failure::Usage("give --diff or both --from and --to".into())),
            };
            if diff.rank() != spec.rank() {
                return Err(Failure::Usage(format!("expected {} coordinates", spec.rank())));
            }
            out.cap(diff.coords().iter().map(|x| x.unsigned_abs() as usize).sum::<usize>())?;
            let b = beta_roots(&spec)?;
            let sols = cone_membership(&diff, &b);
            let rows = sols.iter().map(|s| vec![ints(s)]).collect();
            let value = json!({"spec": spec.to_string(), "diff": diff, "labels": b.labels(), "solutions": sols});
            out.emit(&value, &["solution"], rows);
        }
        Cmd::Roots(RootsCmd::TypeA { spec, eta }) => {
            let eta = RootLatticeElement::new(parse_ints(&eta)?);
            let t = type_a_support(&eta, &spec)?;
            let value = json!({"spec": spec.to_string(), "eta": eta, "type_a": t});
            out.emit(&value, &["eta", "type_a"], vec![vec![ints(eta.coords()), t.to_string()]]);
        }
        Cmd::Verify(args) => {
            let rep = run_verify_suite(args.level);
            if let Some(path) = &args.out {
                let text = serde_json::to_string_pretty(&rep).expect("serialisable");
                std::fs::write(path, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            match out.format {
                Format::Json => {
                    for c in &rep.checks {
                        println!("{}", serde_json::to_string(c).expect("serialisable"));
                    }
                    println!("{}", json!({"summary": rep.summary}));
                }
                Format::Tsv => {
                    println!("name\tstatus\texpected\tactual");
                    for c in &rep.checks {
                        let st = if c.status == Status::Pass { "pass" } else { "fail" };
                        println!("{}\t{st}\t{}\t{}", c.name, c.expected, c.actual);
                    }
                }
            }
            if !rep.ok() {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
