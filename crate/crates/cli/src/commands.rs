use std::time::Instant;

use recoll::abridger::AbContext;
use recoll::approx::AddSubcategory;
use recoll::higher_ar::{enumerate_indecomposables, standard_names, ApproxChoice, ClusterContext, IndecUniverse, Side, Violation};
use recoll::module::{
    ar_translate, ar_translate_inverse, is_injective, is_projective, vertex_count, vertex_idempotent, vertex_name, RightModule,
};
use recoll::recollement::{Adjunction, Functor, Recollement};
use recoll::{Algebra, Error, Mat, Result, Scalar};

use crate::instance::Instance;
use crate::report::{Report, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    AlgebraCheck,
    Indecs,
    RecollementVerify,
    AbCompare,
    NctCheck,
    ArDualityTable,
    Defect,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::AlgebraCheck,
        Command::Indecs,
        Command::RecollementVerify,
        Command::AbCompare,
        Command::NctCheck,
        Command::ArDualityTable,
        Command::Defect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::AlgebraCheck => "algebra-check",
            Command::Indecs => "indecs",
            Command::RecollementVerify => "recollement-verify",
            Command::AbCompare => "ab-compare",
            Command::NctCheck => "nct-check",
            Command::ArDualityTable => "ar-duality-table",
            Command::Defect => "defect",
        }
    }
}

impl std::str::FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Precondition(format!("unknown command `{s}`")))
    }
}

/// Task parameters given on the command line; they win over the instance.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub n: Option<usize>,
    pub idempotent: Option<Vec<String>>,
}

pub fn run(command: Command, inst: &Instance, opts: &Options) -> Result<Report> {
    let start = Instant::now();
    let mut r = Report::new(command.name(), &inst.name);
    match command {
        Command::AlgebraCheck => algebra_check(inst, &mut r)?,
        Command::Indecs => indecs(inst, &mut r)?,
        Command::RecollementVerify => recollement_verify(inst, opts, &mut r)?,
        Command::AbCompare => ab_compare(inst, &mut r)?,
        Command::NctCheck => nct_check(inst, opts, &mut r)?,
        Command::ArDualityTable => ar_duality_table(inst, opts, &mut r)?,
        Command::Defect => defect(inst, opts, &mut r)?,
    }
    r.finish(start.elapsed());
    Ok(r)
}

fn yn(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn matrix(m: &Mat) -> String {
    let rows: Vec<String> = m.row_iter().map(|r| r.iter().map(Scalar::to_string).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

fn dimvec(m: &RightModule) -> Result<String> {
    Ok(list(&m.dimension_vector()?))
}

fn require_n(inst: &Instance, opts: &Options) -> Result<usize> {
    match opts.n.or(inst.n) {
        Some(0) => Err(Error::Precondition("n must be positive".into())),
        Some(n) => Ok(n),
        None => Err(Error::Precondition("missing task parameter `n`".into())),
    }
}

fn require_sub(inst: &Instance) -> Result<AddSubcategory> {
    inst.subcategory()?.ok_or_else(|| Error::Precondition("missing `subcategory`".into()))
}

/// Finds the universe member isomorphic to `m`; `0` for the zero module.
fn name_in(u: &IndecUniverse, m: &RightModule) -> Result<String> {
    if m.is_zero() {
        return Ok("0".into());
    }
    if !m.is_indecomposable()? {
        return Ok(format!("decomposable (dim {})", m.dim()));
    }
    Ok(u.find(m)?.map_or_else(|| format!("missing (dim {})", m.dim()), |i| u.names[i].clone()))
}

/// `0`, `N`, or a sum like `P1+P2^2` over the generators.
fn object_name(sub: &AddSubcategory, m: &RightModule) -> Result<String> {
    if m.is_zero() {
        return Ok("0".into());
    }
    let Some(copies) = sub.contains(m)? else { return Ok(format!("dim {}", m.dim())) };
    let parts: Vec<String> = (0..sub.len())
        .filter_map(|g| match copies.iter().filter(|&&c| c == g).count() {
            0 => None,
            1 => Some(sub.name(g).to_string()),
            k => Some(format!("{}^{k}", sub.name(g))),
        })
        .collect();
    Ok(parts.join("+"))
}

fn algebra_check(inst: &Instance, r: &mut Report) -> Result<()> {
    let a = &inst.algebra;
    let mut t = Table::new("algebra", &["field", "dim", "simples", "radical dim", "basis"]);
    let simples = vertex_count(a);
    let rad = a.radical();
    t.push(vec![
        format!("{:?}", a.field()),
        a.dim().to_string(),
        simples.as_ref().map_or_else(|e| e.to_string(), usize::to_string),
        rad.as_ref().map_or_else(|e| e.to_string(), |s| s.dim().to_string()),
        a.labels().join(" "),
    ]);
    r.table(t);
    r.check("associativity and unit", a.check_axioms().is_ok(), "");
    r.check("primitive idempotents split", simples.is_ok(), simples.as_ref().err().map(ToString::to_string).unwrap_or_default());
    let mut mt = Table::new("modules", &["name", "dim", "dimension vector", "indecomposable", "projective", "injective"]);
    for (name, m) in &inst.modules {
        let ok = m.check().is_ok();
        r.check(format!("module {name}"), ok, "");
        mt.push(vec![
            name.clone(),
            m.dim().to_string(),
            dimvec(m)?,
            yn(m.is_indecomposable()?),
            yn(is_projective(m)?),
            yn(is_injective(m)?),
        ]);
    }
    if !mt.rows.is_empty() {
        r.table(mt);
    }
    if inst.subcategory.is_some() {
        let sub = inst.subcategory();
        let detail = match &sub {
            Ok(Some(s)) => format!("endomorphism algebra of dim {}", s.gamma().dim()),
            Err(e) => e.to_string(),
            Ok(None) => String::new(),
        };
        r.check("subcategory generators", sub.is_ok(), detail);
    }
    Ok(())
}

fn indecs(inst: &Instance, r: &mut Report) -> Result<()> {
    let u = inst.universe()?;
    let mut t = Table::new("indecomposables", &["name", "dim", "dimension vector", "projective", "injective", "tau", "tau-"]);
    let mut closed = true;
    for (m, name) in u.indecs.iter().zip(&u.names) {
        let tau = name_in(&u, &ar_translate(m)?)?;
        let taum = name_in(&u, &ar_translate_inverse(m)?)?;
        closed &= !tau.contains(' ') && !taum.contains(' ');
        t.push(vec![name.clone(), m.dim().to_string(), dimvec(m)?, yn(is_projective(m)?), yn(is_injective(m)?), tau, taum]);
    }
    r.table(t);
    r.check("closed under tau and tau-", closed, format!("{} indecomposables, {:?}", u.len(), u.provenance));
    Ok(())
}

fn vertex_block(a: &Algebra, names: &[String]) -> Result<Vec<Scalar>> {
    let f = a.field();
    let n = vertex_count(a)?;
    let mut e = a.zero_vector();
    for name in names {
        let v = (0..n)
            .find(|&v| vertex_name(a, v).is_ok_and(|s| s == *name))
            .ok_or_else(|| Error::Semantic(format!("unknown vertex `{name}`")))?;
        e = e.iter().zip(vertex_idempotent(a, v)?).map(|(x, y)| f.add(x, &y)).collect();
    }
    Ok(e)
}

fn recollement_verify(inst: &Instance, opts: &Options, r: &mut Report) -> Result<()> {
    let sub = inst.subcategory()?;
    let names = match (opts.idempotent.clone().or_else(|| inst.idempotent.clone()), &sub) {
        (Some(n), _) => n,
        (None, Some(s)) => s.projective_generators()?.into_iter().map(|i| s.name(i).to_string()).collect(),
        (None, None) => return Err(Error::Precondition("missing task parameter `idempotent`".into())),
    };
    let (gamma, e) = match &sub {
        Some(s) => {
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            (s.gamma().clone(), s.idempotent_of(&refs)?)
        }
        None => (inst.algebra.clone(), vertex_block(&inst.algebra, &names)?),
    };
    let rec = Recollement::new(&gamma, &e)?;
    let mut info = Table::new("recollement", &["idempotent", "dim", "corner dim", "quotient dim", "ideal dim"]);
    info.push(vec![
        names.join(" "),
        gamma.dim().to_string(),
        rec.corner().dim().to_string(),
        rec.quotient().dim().to_string(),
        rec.ideal().dim().to_string(),
    ]);
    r.table(info);
    let knit = |a: &Algebra| -> Result<(Vec<RightModule>, Vec<String>)> {
        let u = enumerate_indecomposables(a, None)?;
        Ok((u.indecs, u.names))
    };
    let (gm, gn) = knit(&gamma)?;
    let (cm, cn) = knit(rec.corner())?;
    let (qm, qn) = knit(rec.quotient())?;
    let mods_of = |a: &Algebra| -> (&[RightModule], &[String]) {
        if a == rec.corner() {
            (&cm, &cn)
        } else if a == rec.quotient() {
            (&qm, &qn)
        } else {
            (&gm, &gn)
        }
    };
    for adj in Adjunction::ALL {
        let (lf, rf) = adj.functors();
        let ((xs, xn), (ys, yn_)) = (mods_of(rec.domain(lf)), mods_of(rec.domain(rf)));
        let rep = rec.verify_adjunction(adj, xs, ys)?;
        let mut t = Table::new(&format!("adjunction {}", rep.adjunction), &["x", "y", "dim Hom(Lx, y)", "dim Hom(x, Ry)", "bijective"]);
        for p in &rep.pairs {
            t.push(vec![xn[p.x].clone(), yn_[p.y].clone(), p.hom_left.to_string(), p.hom_right.to_string(), yn(p.bijective)]);
        }
        r.table(t);
        let bad = rep.pairs.iter().filter(|p| !(p.bijective && p.hom_left == p.hom_right)).count();
        r.check(
            format!("adjunction {}", rep.adjunction),
            rep.pass,
            format!("{} pairs, {bad} mismatched, unit natural: {}", rep.pairs.len(), yn(rep.natural)),
        );
    }
    let mut functorial = true;
    for f in Functor::ALL {
        functorial &= rec.verify_functoriality(f, mods_of(rec.domain(f)).0)?;
    }
    r.check("functoriality of the six functors", functorial, "");
    let ax = rec.verify_axioms(&gm, &cm, &qm)?;
    let failed: Vec<&str> = ax.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    r.check("unit and counit isomorphisms", ax.pass, format!("{} checks, failing: [{}]", ax.checks.len(), failed.join("; ")));
    let serre = rec.verify_serre_quotient(&gm, &cm, &qm)?;
    r.check("q is exact", serre.q_exact, "");
    r.check("q q_rho is the identity", serre.counit_iso, "");
    r.check("Ker q = Im e", serre.kernel_matches, "");
    let (g, q, c) = serre.simples;
    let mut st = Table::new("simples", &["algebra", "quotient", "corner"]);
    st.push(vec![g.to_string(), q.to_string(), c.to_string()]);
    r.table(st);
    r.check("simple count", g == q + c, format!("{g} = {q} + {c}"));
    let mut dt = Table::new("defining sequences", &["module", "right dims", "right exact", "left dims", "left exact"]);
    let mut exact = true;
    for (x, name) in gm.iter().zip(&gn) {
        let rd = rec.right_defining_sequence(x)?;
        let ld = rec.left_defining_sequence(x)?;
        exact &= rd.is_exact() && ld.is_exact();
        dt.push(vec![name.clone(), list(&rd.dims()), yn(rd.is_exact()), list(&ld.dims()), yn(ld.is_exact())]);
    }
    r.table(dt);
    r.check("defining sequences exact", exact, "");
    Ok(())
}

fn ab_compare(inst: &Instance, r: &mut Report) -> Result<()> {
    let ctx = AbContext::new(require_sub(inst)?)?;
    let rec = ctx.recollement();
    let gamma = ctx.subcategory().gamma();
    let mods = enumerate_indecomposables(gamma, None)?.indecs;
    let names = standard_names(gamma, &mods)?;
    let mut t = Table::new(
        "comparison",
        &[
            "module",
            "dim",
            "AB dims",
            "right-defining dims",
            "iso",
            "Ext1,Ext2",
            "Ext(Tr X)",
            "reflexive",
            "second syzygy",
            "copresentation",
        ],
    );
    let mut w = Table::new("witnesses", &["module", "position", "matrix"]);
    let (mut all_iso, mut ext_ok, mut restored, mut defects) = (true, true, true, true);
    for (x, name) in mods.iter().zip(&names) {
        let data = ctx.ab_sequence(x)?;
        let cmp = ctx.compare_with_right_defining(x)?;
        let tr = ctx.ext_of_transpose(x)?;
        let wit = ctx.second_syzygy_membership(x)?;
        all_iso &= cmp.pass();
        ext_ok &= tr == data.ext_dims;
        restored &= wit.member == wit.copresentation.is_some() && wit.member == data.evaluation.is_iso();
        if !x.is_zero() && rec.killed_by_e(x) {
            defects &= !wit.member;
        }
        if let Some(iso) = &cmp.iso {
            for (k, m) in iso.maps.iter().enumerate() {
                w.push(vec![name.clone(), k.to_string(), matrix(m.matrix())]);
            }
        }
        t.push(vec![
            name.clone(),
            x.dim().to_string(),
            list(&cmp.ab_dims),
            list(&cmp.rd_dims),
            yn(cmp.pass()),
            list(&[data.ext_dims.0, data.ext_dims.1]),
            list(&[tr.0, tr.1]),
            yn(data.evaluation.is_iso()),
            yn(wit.member),
            yn(wit.copresentation.is_some()),
        ]);
    }
    r.table(t);
    r.table(w);
    r.check("AB sequence isomorphic to the right-defining sequence", all_iso, format!("{} modules", mods.len()));
    r.check("Ext of the transpose", ext_ok, "");
    r.check("q_rho q X = X iff two-step copresentation", restored, "");
    r.check("defect modules are not second syzygies", defects, "");
    Ok(())
}

fn side(s: &Side) -> &'static str {
    match s {
        Side::LeftPerp => "left",
        Side::RightPerp => "right",
    }
}

fn nct_check(inst: &Instance, opts: &Options, r: &mut Report) -> Result<()> {
    let n = require_n(inst, opts)?;
    let sub = require_sub(inst)?;
    let u = inst.universe()?;
    let rep = recoll::higher_ar::is_n_cluster_tilting(&u, &sub, n)?;
    let mut t = Table::new("indecomposables", &["name", "in B", "left perp", "right perp"]);
    for name in &u.names {
        t.push(vec![name.clone(), yn(rep.members.contains(name)), yn(rep.left_perp.contains(name)), yn(rep.right_perp.contains(name))]);
    }
    r.table(t);
    let mut vt = Table::new("violations", &["module", "kind", "side", "degree", "generator", "dim"]);
    for v in &rep.violations {
        match v {
            Violation::Outside { module, side: s } => {
                vt.push(vec![module.clone(), "outside".into(), side(s).into(), "-".into(), "-".into(), "-".into()])
            }
            Violation::Inside { module, side: s, degree, generator, dim } => {
                vt.push(vec![module.clone(), "inside".into(), side(s).into(), degree.to_string(), generator.clone(), dim.to_string()])
            }
        }
    }
    r.table(vt);
    let mut mods: Vec<&str> = rep.violations.iter().map(Violation::module).collect();
    mods.dedup();
    r.check(format!("{n}-cluster-tilting"), rep.pass, format!("violations at [{}]", mods.join(" ")));
    Ok(())
}

fn cluster_context(inst: &Instance, opts: &Options, r: &mut Report) -> Result<Option<ClusterContext>> {
    let n = require_n(inst, opts)?;
    let ctx = ClusterContext::new(inst.universe()?, require_sub(inst)?, n)?;
    let mods: Vec<&str> = ctx.report.violations.iter().map(Violation::module).collect();
    r.check(format!("{n}-cluster-tilting"), ctx.report.pass, format!("violations at [{}]", mods.join(" ")));
    Ok(ctx.report.pass.then_some(ctx))
}

fn sigma_tau(ctx: &ClusterContext, r: &mut Report) -> Result<()> {
    let st = ctx.verify_sigma_equals_tau()?;
    let mut t = Table::new("sigma and tau", &["generator", "direction", "sigma", "dim tau", "agree"]);
    for row in &st.rows {
        t.push(vec![row.generator.clone(), row.direction.clone(), row.sigma.clone(), row.tau_dim.to_string(), yn(row.pass)]);
    }
    r.table(t);
    r.check("sigma_n = tau_n", st.pass, format!("{} generators", st.rows.len()));
    Ok(())
}

fn ar_duality_table(inst: &Instance, opts: &Options, r: &mut Report) -> Result<()> {
    let Some(ctx) = cluster_context(inst, opts, r)? else { return Ok(()) };
    let d = ctx.verify_n_ar_duality()?;
    let mut t = Table::new(&format!("duality n = {}", d.n), &["x", "y", "under", "Ext^n", "over", "equal"]);
    for row in &d.rows {
        t.push(vec![row.x.clone(), row.y.clone(), row.under.to_string(), row.ext.to_string(), row.over.to_string(), yn(row.pass)]);
    }
    r.table(t);
    r.check("n-AR duality", d.pass, format!("{} pairs", d.rows.len()));
    sigma_tau(&ctx, r)
}

fn defect(inst: &Instance, opts: &Options, r: &mut Report) -> Result<()> {
    let Some(ctx) = cluster_context(inst, opts, r)? else { return Ok(()) };
    let sub = &ctx.sub;
    let mut t = Table::new(
        "n-exact sequences",
        &["generator", "through", "terms", "dims", "certified", "contravariant defect", "covariant defect"],
    );
    let mut certified = true;
    let mut formula = Table::new("defect formula", &["sequence", "generator", "dim D(contravariant)", "dim covariant after sigma"]);
    let mut formula_ok = true;
    let mut seqs = Vec::new();
    for s in 0..sub.len() {
        if !ctx.is_projective(s) {
            seqs.push((s, "projective cover", ctx.cover_sequence(s, ApproxChoice::Minimal)?));
        }
        if !ctx.is_injective(s) {
            seqs.push((s, "injective hull", ctx.hull_sequence(s, ApproxChoice::Minimal)?));
        }
    }
    for (s, through, seq) in &seqs {
        let cert = seq.certify(sub)?;
        let d = seq.defects(sub)?;
        certified &= cert.pass;
        let terms = seq.terms.iter().map(|m| object_name(sub, m)).collect::<Result<Vec<_>>>()?;
        t.push(vec![
            sub.name(*s).to_string(),
            through.to_string(),
            terms.join(" <- "),
            list(&seq.dims()),
            yn(cert.pass),
            d.contravariant.dim().to_string(),
            d.covariant.dim().to_string(),
        ]);
        let f = ctx.verify_higher_defect_formula(seq)?;
        formula_ok &= f.pass;
        for row in &f.rows {
            formula.push(vec![format!("{} ({through})", sub.name(*s)), row.generator.clone(), row.lhs.to_string(), row.rhs.to_string()]);
        }
    }
    r.table(t);
    r.table(formula);
    r.check("n-exact completions certified", certified, format!("{} sequences", seqs.len()));
    r.check("defect formula", formula_ok, "");
    sigma_tau(&ctx, r)?;
    let h = ctx.verify_homotopy_invariance()?;
    let mut ht = Table::new("homotopy invariance", &["generator", "variant", "dims", "contravariant iso", "covariant iso"]);
    for row in &h.rows {
        ht.push(vec![row.generator.clone(), row.variant.clone(), list(&row.dims), yn(row.contravariant_iso), yn(row.covariant_iso)]);
    }
    r.table(ht);
    r.check("defects independent of the completion", h.pass, format!("{} variants", h.rows.len()));
    Ok(())
}
