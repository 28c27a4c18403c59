use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use hjl_core::algebra::{check_axioms, AlgebraMorphism};
use hjl_core::representations::{
    adjoint_representation, check_representation, coadjoint_report, coadjoint_representation, trivial_representation,
    Representation,
};
use hjl_core::{deformations, derivations, fixtures, quadratic, representations as reps};
use hjl_core::{Error as CoreError, HjlAlgebra, Matrix, Tensor3, Verdict};

use crate::formats::{self, CliError, CliResult, NamedAlgebra};
use crate::report::{Item, Report};

#[derive(Debug, Parser)]
#[command(name = "hjl", version, about = "Exact computations with hom-Jordan-Lie algebras")]
pub struct Cli {
    /// Emit the report as JSON instead of `key: value` lines.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the constructed algebra to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms (Jordan symmetry, hom-Jacobi, multiplicativity, regularity).
    Check { algebra: PathBuf },
    /// Basis of the α^k-derivations.
    Derivations {
        algebra: PathBuf,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        k: i64,
        /// Check this map instead of only listing the basis.
        #[arg(long, value_name = "MAP")]
        check: Option<PathBuf>,
    },
    /// Cocycles, coboundaries and cohomology in degree 1 or 2.
    Cohomology {
        algebra: PathBuf,
        /// trivial | adjoint:S | coadjoint | a representation file
        #[arg(long, default_value = "trivial")]
        rep: String,
        #[arg(long, default_value_t = 2)]
        degree: u8,
    },
    /// Semidirect product with a representation.
    Semidirect {
        algebra: PathBuf,
        #[arg(long)]
        rep: String,
    },
    /// One-dimensional central extension by a trivial-coefficient 2-cochain.
    CentralExtend {
        algebra: PathBuf,
        theta: PathBuf,
        /// Decide equivalence with the extension by a second cochain.
        #[arg(long, value_name = "THETA")]
        compare: Option<PathBuf>,
    },
    /// Extension by an α-derivation.
    ExtendDeriv { algebra: PathBuf, map: PathBuf },
    /// Nijenhuis check and the induced trivial deformation.
    Nijenhuis { algebra: PathBuf, map: PathBuf },
    /// Check that a 2-cochain with values in L generates a deformation.
    Deformation { algebra: PathBuf, psi: PathBuf },
    /// Jordancyclic 2-cocycles with values in the coadjoint representation.
    Cocycles { algebra: PathBuf },
    /// The T*-extension by a Jordancyclic cocycle (zero by default).
    Tstar {
        algebra: PathBuf,
        #[arg(long, value_name = "FILE")]
        omega: Option<PathBuf>,
    },
    /// Split T*₀ of a direct sum along two ideals.
    TstarSplit {
        algebra: PathBuf,
        first: PathBuf,
        second: PathBuf,
    },
    /// Derived and central series; with --omega also the T*-length bounds.
    Series {
        algebra: PathBuf,
        #[arg(long, value_name = "FILE")]
        omega: Option<PathBuf>,
    },
    /// Equivalence of two T*-extensions of the same algebra.
    TstarEquiv {
        algebra: PathBuf,
        first: PathBuf,
        second: PathBuf,
        /// Drop the compatibility condition Zα = αᵀZ.
        #[arg(long)]
        no_compat: bool,
        /// Verify this map z instead of solving for one.
        #[arg(long, value_name = "MAP")]
        z: Option<PathBuf>,
    },
    /// Recover (B, ω) from a quadratic algebra and an isotropic ideal.
    Reconstruct {
        algebra: PathBuf,
        form: PathBuf,
        ideal: PathBuf,
    },
    /// Check that a linear map is a morphism.
    Morphism {
        source: PathBuf,
        target: PathBuf,
        map: PathBuf,
    },
    /// Write the built-in fixture corpus into a directory.
    Corpus { dir: PathBuf },
}

/// Routes a core result into the report: failed conditions become failing
/// verdicts (exit 1), malformed input stays an error (exit 2).
fn construct<T>(report: &mut Report, r: hjl_core::Result<T>) -> CliResult<Option<T>> {
    match r {
        Ok(t) => Ok(Some(t)),
        Err(CoreError::Violated { condition, witness }) => {
            report.verdict(condition, Verdict::Fails(witness));
            Ok(None)
        }
        Err(CoreError::Precondition(m)) => {
            report.fail(m);
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn named(name: &str, suffix: &str) -> String {
    if name.is_empty() {
        suffix.to_string()
    } else {
        format!("{name}-{suffix}")
    }
}

struct Output<'a> {
    path: Option<&'a Path>,
}

impl Output<'_> {
    fn write(&self, name: &str, l: &HjlAlgebra) -> CliResult<()> {
        if let Some(p) = self.path {
            write_json(p, &formats::algebra_value(name, l))?;
        }
        Ok(())
    }
}

fn write_json(path: &Path, v: &serde_json::Value) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(v).expect("serializable");
    text.push('\n');
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn dims_of(l: &HjlAlgebra) -> (usize, usize, usize) {
    (l.dim(), l.dim(), l.dim())
}

fn omega_or_zero(path: Option<&Path>, l: &HjlAlgebra) -> CliResult<Tensor3> {
    match path {
        Some(p) => formats::parse_cochain(p, "dual-cochain2", l.delta(), dims_of(l)),
        None => Ok(Tensor3::zeros(dims_of(l))),
    }
}

/// `trivial`, `adjoint:S`, `coadjoint` or a representation file. Returns
/// `None` after recording why the representation does not exist.
fn representation(spec: &str, l: &HjlAlgebra, report: &mut Report) -> CliResult<Option<Representation>> {
    let rep = match spec {
        "trivial" => trivial_representation(l),
        "coadjoint" => match coadjoint_representation(l) {
            Some(r) => r,
            None => {
                let c = coadjoint_report(l);
                report.verdict("coadjoint_twist", c.twist);
                report.verdict("coadjoint_bracket", c.bracket);
                return Ok(None);
            }
        },
        s if s.starts_with("adjoint:") => {
            let exp: i64 = s["adjoint:".len()..]
                .parse()
                .map_err(|_| CliError::Usage(format!("bad adjoint exponent in `{s}`")))?;
            match construct(report, adjoint_representation(l, exp))? {
                Some(r) => r,
                None => return Ok(None),
            }
        }
        path => formats::parse_representation(Path::new(path), l)?,
    };
    let check = check_representation(&rep);
    let ok = check.holds();
    report.verdict("representation_twist", check.twist);
    report.verdict("representation_bracket", check.bracket);
    Ok(ok.then_some(rep))
}

fn push_axioms(report: &mut Report, l: &HjlAlgebra) {
    let ax = check_axioms(l);
    report.verdict("jordan_symmetric", ax.jordan_symmetric);
    report.verdict("hom_jacobi", ax.hom_jacobi);
    report.verdict("multiplicative", ax.multiplicative);
    report.check("regular", ax.regular);
}

pub fn execute(cli: &Cli, command_line: String) -> CliResult<Report> {
    let mut report = Report::new(command_line);
    let out = Output {
        path: cli.output.as_deref(),
    };
    let r = &mut report;
    match &cli.command {
        Command::Check { algebra } => {
            let NamedAlgebra { name, algebra: l } = formats::parse_algebra(algebra)?;
            r.push(
                "algebra",
                Item::Text(format!("{name} (dim {}, delta {})", l.dim(), l.delta())),
            );
            push_axioms(r, &l);
        }
        Command::Derivations { algebra, k, check } => {
            let l = formats::parse_algebra(algebra)?.algebra;
            if let Some(map) = check {
                let d = formats::parse_map(map, "map")?;
                if let Some(rep) = construct(r, derivations::derivation_report(&l, &d, *k))? {
                    r.verdict("commutes", rep.commutes);
                    r.verdict("leibniz", rep.leibniz);
                }
            }
            if let Some(basis) = construct(r, derivations::derivation_space(&l, *k))? {
                r.push("k", Item::Text(k.to_string()));
                r.push("dim", Item::Number(basis.len()));
                r.push("basis", Item::Matrices(basis));
            }
        }
        Command::Cohomology { algebra, rep, degree } => {
            let l = formats::parse_algebra(algebra)?.algebra;
            if !matches!(degree, 1 | 2) {
                return Err(CliError::Usage(format!("degree must be 1 or 2, got {degree}")));
            }
            let Some(rp) = representation(rep, &l, r)? else {
                return Ok(report);
            };
            let (n, m) = (l.dim(), rp.module_dim());
            if *degree == 1 {
                r.push("c1_dim", Item::Number(reps::cochain1_space(&rp).len()));
                let z = reps::z1(&rp);
                r.push("z1_dim", Item::Number(z.dim()));
                let basis = z.basis().iter().map(|v| Matrix::from_data(m, n, v.clone())).collect();
                r.push("z1", Item::Matrices(basis));
                if let Some(s) = rep.strip_prefix("adjoint:").and_then(|s| s.parse::<i64>().ok()) {
                    if l.delta().pow(s + 1).is_plus() {
                        if let Some(cd) = construct(r, reps::cocycle_derivation_match(&l, s))? {
                            r.check("cocycles_are_derivations", cd.equal());
                        }
                    }
                }
            } else {
                r.push("c2_dim", Item::Number(reps::cochain2_space(&rp).len()));
                if let Some(h) = construct(r, reps::cohomology2(&rp))? {
                    r.push("z2_dim", Item::Number(h.z2.len()));
                    r.push("b2_dim", Item::Number(h.b2.len()));
                    r.push("h2_dim", Item::Number(h.h2));
                    r.push("z2", Item::Tensors("cochain2", h.z2));
                    r.push("b2", Item::Tensors("cochain2", h.b2));
                }
            }
        }
        Command::Semidirect { algebra, rep } => {
            let NamedAlgebra { name, algebra: l } = formats::parse_algebra(algebra)?;
            if let Some(rp) = representation(rep, &l, r)? {
                if let Some(s) = construct(r, reps::semidirect_product(&rp))? {
                    let name = named(&name, "semidirect");
                    out.write(&name, &s)?;
                    r.push("semidirect", Item::Algebra(name, s));
                }
            }
        }
        Command::CentralExtend {
            algebra,
            theta,
            compare,
        } => {
            let NamedAlgebra { name, algebra: l } = formats::parse_algebra(algebra)?;
            let dims = (l.dim(), l.dim(), 1);
            let t1 = formats::parse_cochain(theta, "cochain2", l.delta(), dims)?;
            let triv = trivial_representation(&l);
            let cr = reps::cochain2_report(&triv, &t1)?;
            r.verdict("compatible", cr.compatible);
            let closed = Verdict::from(reps::d2(&triv, &t1)?.first_nonzero());
            let is_closed = closed.holds();
            r.verdict("closed", closed);
            if is_closed && r.all_hold() {
                if let Some(e) = construct(r, reps::central_extension(&l, &t1))? {
                    let name = named(&name, "central");
                    out.write(&name, &e)?;
                    r.push("extension", Item::Algebra(name, e));
                }
            }
            if let Some(p) = compare {
                let t2 = formats::parse_cochain(p, "cochain2", l.delta(), dims)?;
                if let Some(f) = construct(r, reps::central_extensions_equivalent(&l, &t1, &t2))? {
                    r.check("equivalent", f.is_some());
                    if let Some(f) = f {
                        r.push("f", Item::Matrix(f));
                    }
                }
            }
        }
        Command::ExtendDeriv { algebra, map } => {
            let NamedAlgebra { name, algebra: l } = formats::parse_algebra(algebra)?;
            let d = formats::parse_map(map, "map")?;
            if let Some(e) = construct(r, derivations::derivation_extension(&l, &d))? {
                let name = named(&name, "extended");
                out.write(&name, &e)?;
                r.push("extension", Item::Algebra(name, e));
            }
        }
        Command::Nijenhuis { algebra, map } => {
            let l = formats::parse_algebra(algebra)?.algebra;
            let n = formats::parse_map(map, "map")?;
            let Some(v) = construct(r, deformations::nijenhuis_report(&l, &n))? else {
                return Ok(report);
            };
            let is_nijenhuis = v.holds();
            r.verdict("nijenhuis", v);
            if let Some(t) = construct(r, deformations::triviality_report(&l, &n))? {
                r.verdict("order_0", t.t0);
                r.verdict("order_1", t.t1);
                r.verdict("order_2", t.t2);
            }
            if let Some(b) = construct(r, deformations::nijenhuis_bracket(&l, &n))? {
                r.push("deformed_bracket", Item::Tensor("cochain2", b));
            }
            if is_nijenhuis {
                if let Some(psi) = construct(r, deformations::deformation_from_nijenhuis(&l, &n))? {
                    if let Some(d) = construct(r, deformations::check_deformation(&l, &psi))? {
                        push_deformation(r, d);
                    }
                    r.push("psi", Item::Tensor("cochain2", psi));
                }
            }
        }
        Command::Deformation { algebra, psi } => {
            let l = formats::parse_algebra(algebra)?.algebra;
            let psi = formats::parse_cochain(psi, "cochain2", l.delta(), dims_of(&l))?;
            if let Some(d) = construct(r, deformations::check_deformation(&l, &psi))? {
                push_deformation(r, d);
            }
        }
        Command::Cocycles { algebra } => {
            let l = formats::parse_algebra(algebra)?.algebra;
            if let Some(ws) = construct(r, quadratic::jordancyclic_cocycles(&l))? {
                r.push("dim", Item::Number(ws.len()));
                r.push("cocycles", Item::Tensors("dual-cochain2", ws));
            }
        }
        Command::Tstar { algebra, omega } => {
            let NamedAlgebra { name, algebra: l } = formats::parse_algebra(algebra)?;
            let w = omega_or_zero(omega.as_deref(), &l)?;
            let Some(p) = construct(r, quadratic::tstar_preconditions(&l, &w))? else {
                return Ok(report);
            };
            r.verdict("coadjoint_twist", p.coadjoint.twist);
            r.verdict("coadjoint_bracket", p.coadjoint.bracket);
            r.verdict("omega_compatible", p.cochain.compatible);
            r.verdict("jordancyclic", p.jordancyclic);
            r.verdict("cocycle", p.cocycle);
            if r.all_hold() {
                if let Some(t) = construct(r, quadratic::tstar_extension(&l, &w))? {
                    let name = named(&name, "tstar");
                    out.write(&name, t.algebra())?;
                    r.push("extension", Item::Algebra(name, t.algebra().clone()));
                    r.push("form", Item::Matrix(t.form().clone()));
                }
            }
        }
        Command::TstarSplit { algebra, first, second } => {
            let l = formats::parse_algebra(algebra)?.algebra;
            let i = formats::parse_subspace(first, l.dim())?;
            let j = formats::parse_subspace(second, l.dim())?;
            if let Some((ti, tj)) = construct(r, quadratic::tstar_split(&l, &i, &j))? {
                r.check("ideals", true);
                r.push("first", Item::Subspace(ti));
                r.push("second", Item::Subspace(tj));
            }
        }
        Command::Series { algebra, omega } => {
            let l = formats::parse_algebra(algebra)?.algebra;
            let s = quadratic::series(&l);
            r.push("solvable_length", Item::OptionalNumber(s.solvable_length));
            r.push("nilpotent_length", Item::OptionalNumber(s.nilpotent_length));
            if let Some(p) = omega {
                let w = formats::parse_cochain(p, "dual-cochain2", l.delta(), dims_of(&l))?;
                if let Some(b) = construct(r, quadratic::check_length_bounds(&l, &w))? {
                    for (key, bound) in [("solvable", b.solvable), ("nilpotent", b.nilpotent)] {
                        if let Some(b) = bound {
                            r.push(format!("tstar_{key}_length"), Item::OptionalNumber(b.r));
                            r.push(
                                format!("{key}_bound"),
                                Item::Text(format!("{} <= r <= {}", b.lower, b.upper)),
                            );
                            r.check(format!("{key}_bound_holds"), b.holds());
                        }
                    }
                }
            }
            r.push("derived", Item::Subspaces(s.derived));
            r.push("descending", Item::Subspaces(s.descending));
            r.push("ascending", Item::Subspaces(s.ascending));
        }
        Command::TstarEquiv {
            algebra,
            first,
            second,
            no_compat,
            z,
        } => {
            let l = formats::parse_algebra(algebra)?.algebra;
            let w1 = formats::parse_cochain(first, "dual-cochain2", l.delta(), dims_of(&l))?;
            let w2 = formats::parse_cochain(second, "dual-cochain2", l.delta(), dims_of(&l))?;
            if let Some(zp) = z {
                let z = formats::parse_map(zp, "map")?;
                if let Some(e) = construct(r, quadratic::equivalence_map_report(&l, &w1, &w2, &z))? {
                    r.verdict("equation", e.equation);
                    if !no_compat {
                        r.verdict("compatible", e.compatible);
                    }
                    r.verdict("morphism_brackets", e.morphism.brackets);
                    r.verdict("morphism_twists", e.morphism.twists);
                    r.check("isometry_defect", e.isometry_defect);
                    r.push("isometric", Item::Flag(e.isometric));
                    r.push(
                        "symmetric_part_invariant",
                        Item::Flag(e.symmetric_part_invariant.holds()),
                    );
                }
            } else if let Some(e) = construct(r, quadratic::tstar_equivalence(&l, &w1, &w2, !no_compat))? {
                r.check("equivalent", e.equivalent());
                r.push("isometric", Item::Flag(e.isometric()));
                if let Some(z) = e.z {
                    r.push("z", Item::Matrix(z));
                }
                if let Some(z) = e.isometric_z {
                    r.push("isometric_z", Item::Matrix(z));
                }
            }
        }
        Command::Reconstruct { algebra, form, ideal } => {
            let NamedAlgebra { name, algebra: l } = formats::parse_algebra(algebra)?;
            let q = formats::parse_map(form, "form")?;
            let i = formats::parse_subspace(ideal, l.dim())?;
            let Some(qa) = construct(r, quadratic::QuadraticHjl::new(l, q))? else {
                return Ok(report);
            };
            if let Some(rec) = construct(r, quadratic::reconstruct_from_isotropic_ideal(&qa, &i))? {
                r.check("isometric_isomorphism", true);
                let name = named(&name, "base");
                out.write(&name, &rec.base)?;
                r.push("base", Item::Algebra(name, rec.base));
                r.push("omega", Item::Tensor("dual-cochain2", rec.w));
                r.push("phi", Item::Matrix(rec.phi));
                r.push("complement", Item::Subspace(rec.complement));
            }
        }
        Command::Morphism { source, target, map } => {
            let s = formats::parse_algebra(source)?.algebra;
            let t = formats::parse_algebra(target)?.algebra;
            let phi = formats::parse_map(map, "map")?;
            let m = AlgebraMorphism::new(s, t, phi)?;
            let rep = hjl_core::algebra::morphism_report(&m);
            r.verdict("brackets", rep.brackets);
            r.verdict("twists", rep.twists);
            r.push("graph", Item::Subspace(hjl_core::algebra::graph_subspace(&m)));
        }
        Command::Corpus { dir } => {
            let n = emit_fixture_corpus(dir)?;
            r.push("written", Item::Number(n));
        }
    }
    Ok(report)
}

fn push_deformation(r: &mut Report, d: deformations::DeformationReport) {
    r.verdict("psi_sign_rule", d.cochain.sign_rule);
    r.verdict("psi_compatible", d.cochain.compatible);
    r.verdict("psi_quadratic", d.quadratic);
    r.verdict("psi_linear", d.linear);
}

/// Writes the built-in corpus as `<name>.json`; rewriting is byte-identical.
pub fn emit_fixture_corpus(dir: &Path) -> CliResult<usize> {
    let io = |source| CliError::Io {
        path: dir.display().to_string(),
        source,
    };
    fs::create_dir_all(dir).map_err(io)?;
    let corpus = fixtures::corpus();
    for (name, l) in &corpus {
        write_json(&dir.join(format!("{name}.json")), &formats::algebra_value(name, l))?;
    }
    Ok(corpus.len())
}
