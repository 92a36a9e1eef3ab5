//! Human-readable rendering of a structured report.

use std::fmt::Write;

use commutant::lefschetz::{LefschetzReport, Verdict};
use commutant::partition::{Numbering, Partition};

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::CertifiedYes => "certified-yes",
        Verdict::CertifiedNo => "certified-no",
        Verdict::Undetermined => "undetermined",
    }
}

fn seq(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn plus(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+")
}

pub fn render_text(r: &LefschetzReport) -> String {
    let mut out = String::new();
    let w = &mut out;

    writeln!(w, "== algebra ==").unwrap();
    let field = if r.field_characteristic == 0 {
        "Q".to_string()
    } else {
        format!("F_{}", r.field_characteristic)
    };
    writeln!(w, "field:          {field}").unwrap();
    writeln!(w, "variables:      {}", r.variables.join(", ")).unwrap();
    for (i, g) in r.ideal_generators.iter().enumerate() {
        writeln!(w, "generator {:>2}:   {g}", i + 1).unwrap();
    }
    writeln!(w, "monomial order: {}", r.monomial_order).unwrap();
    writeln!(w, "dimension:      {}", r.dim).unwrap();
    writeln!(w, "hilbert:        ({})", seq(&r.hilbert)).unwrap();
    writeln!(w, "sperner:        {}", r.sperner).unwrap();
    writeln!(w, "cosperner:      {}", r.cosperner).unwrap();
    writeln!(w, "gorenstein:     {}", if r.gorenstein { "yes" } else { "no" }).unwrap();

    for f in &r.forms {
        writeln!(w, "\n== form {} = {} ==", f.name, f.form).unwrap();
        writeln!(w, "jordan type:    ({})", seq(&f.jordan_type)).unwrap();
        writeln!(w, "dual partition: {}", plus(&f.dual)).unwrap();
        let t = Partition::new(f.jordan_type.clone());
        write!(w, "{}", t.render_young(Numbering::Plain)).unwrap();
        writeln!(w, "rank:           {}", f.rank).unwrap();
        writeln!(w, "quotient hilbert: ({})", seq(&f.quotient_hilbert)).unwrap();
        writeln!(w, "weak lefschetz element:   {}", if f.is_wlp_element { "yes" } else { "no" }).unwrap();
        writeln!(w, "strong lefschetz element: {}", if f.is_slp_element { "yes" } else { "no" }).unwrap();
    }

    if let Some(g) = &r.generic {
        writeln!(w, "\n== sampled general form ==").unwrap();
        writeln!(w, "best coefficients: {:?}", g.best_coeffs).unwrap();
        writeln!(w, "jordan type:    ({})", seq(&g.jordan_type)).unwrap();
        writeln!(w, "dual partition: {}", plus(&g.dual)).unwrap();
        writeln!(w, "rank:           {}", g.rank).unwrap();
        writeln!(w, "dominates all samples: {}", if g.dominates_all_samples { "yes" } else { "no" })
            .unwrap();
        writeln!(w, "wlp: {}{}", verdict(g.wlp), witness_suffix(&g.wlp_witness)).unwrap();
        writeln!(w, "slp: {}{}", verdict(g.slp), witness_suffix(&g.slp_witness)).unwrap();
        if g.char_warning {
            writeln!(w, "warning: positive characteristic; strong Lefschetz notions are heuristic here")
                .unwrap();
        }
    }

    if let Some(c) = &r.commutator {
        writeln!(w, "\n== commutator algebra of the jordan matrix ==").unwrap();
        writeln!(w, "partition:      ({})", seq(&c.partition)).unwrap();
        writeln!(w, "dual partition: {}", plus(&c.dual)).unwrap();
        let mults: Vec<String> =
            c.multiplicities.iter().map(|[f, m]| format!("{f}^{m}")).collect();
        writeln!(w, "multiplicities: {}", mults.join(" ")).unwrap();
        writeln!(w, "dim C(J):       {}", c.dimension).unwrap();
        writeln!(w, "coarse sizes:   ({})", seq(&c.coarse_sizes)).unwrap();
        writeln!(w, "fine sizes of the first coarse block: ({})", seq(&c.fine_sizes_of_first)).unwrap();
    }

    if let Some(c) = &r.csm {
        writeln!(w, "\n== central simple modules for z = {} ==", c.z).unwrap();
        for m in &c.modules {
            writeln!(
                w,
                "U_{}: f={} dim={} hilbert ({}) starting in degree {}",
                m.index,
                m.f,
                m.multiplicity,
                seq(&m.u_hilbert),
                m.u_offset
            )
            .unwrap();
            writeln!(
                w,
                "W_{}:            hilbert ({}) starting in degree {}",
                m.index,
                seq(&m.w_hilbert),
                m.w_offset
            )
            .unwrap();
        }
        writeln!(
            w,
            "degree shifts U_i -> W_i by f_i - 1 verified: {}",
            if c.shifts_verified { "yes" } else { "no" }
        )
        .unwrap();
    }

    if let Some(g) = &r.gr {
        writeln!(w, "\n== associated graded algebra along ({}) ==", g.z).unwrap();
        writeln!(w, "jordan type of the starred z action: ({})", seq(&g.jordan_type)).unwrap();
        writeln!(w, "matches the type over the algebra:   {}", yesno(g.star_z_type_matches)).unwrap();
        writeln!(w, "filtration route = truncation route: {}", yesno(g.truncation_route_matches))
            .unwrap();
        writeln!(
            w,
            "kernel of starred z: {} (direct) = {} (ideal formula)",
            g.kernel_dim_direct, g.kernel_dim_formula
        )
        .unwrap();
    }

    if let Some(c) = &r.wlp {
        writeln!(w, "\n== weak lefschetz certificate ==").unwrap();
        writeln!(w, "y: {}", c.y).unwrap();
        writeln!(w, "z: {}", c.z).unwrap();
        let parts: Vec<String> = c
            .per_block
            .iter()
            .map(|b| format!("rank(G^{})={}", b.f, b.rank))
            .collect();
        writeln!(w, "block ranks:   {}", parts.join(", ")).unwrap();
        let sum: Vec<String> = c
            .per_block
            .iter()
            .map(|b| b.rank.to_string())
            .chain(std::iter::once(c.rank_z.to_string()))
            .collect();
        writeln!(w, "bound:         {} = {}", sum.join(" + "), c.bound).unwrap();
        writeln!(w, "cosperner:     {}", c.cosperner).unwrap();
        let lr: Vec<String> = c.lambda_ranks.iter().map(|(l, rk)| format!("{l}:{rk}")).collect();
        writeln!(w, "rank(y + lambda z) by lambda: {}", lr.join(" ")).unwrap();
        match c.witness_lambda {
            Some(l) => writeln!(w, "verdict: {} (witness lambda = {l})", verdict(c.verdict)).unwrap(),
            None => writeln!(w, "verdict: {}", verdict(c.verdict)).unwrap(),
        }
    }

    if let Some(s) = &r.slp_by_csm {
        writeln!(w, "\n== strong lefschetz via central simple modules ==").unwrap();
        writeln!(w, "gorenstein: {}", yesno(s.gorenstein)).unwrap();
        for m in &s.modules {
            writeln!(
                w,
                "U_{}: hilbert ({}) jordan type ({}) slp {}{}",
                m.index,
                seq(&m.hilbert_window),
                seq(&m.jordan_type),
                verdict(m.slp),
                witness_suffix(&m.witness),
            )
            .unwrap();
        }
        writeln!(w, "verdict: {}", verdict(s.verdict)).unwrap();
        if s.char_warning {
            writeln!(w, "warning: positive characteristic; strong Lefschetz notions are heuristic here")
                .unwrap();
        }
    }

    writeln!(w, "\n== sampling ==").unwrap();
    writeln!(w, "seed:        {}", r.sampling.seed).unwrap();
    writeln!(
        w,
        "lambdas:     {}",
        r.sampling.lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
    )
    .unwrap();
    writeln!(w, "coeff bound: {}", r.sampling.coeff_bound).unwrap();
    writeln!(w, "samples:     {}", r.sampling.samples).unwrap();
    writeln!(w, "module slp criterion: {}", r.module_slp_criterion).unwrap();
    for n in &r.notes {
        writeln!(w, "note: {n}").unwrap();
    }
    out
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_suffix(witness: &Option<Vec<i64>>) -> String {
    match witness {
        Some(v) => format!(" (witness coefficients {v:?})"),
        None => String::new(),
    }
}
