use std::fmt::Write;

use vq_chartab::algebra::Cyclotomic;
use vq_chartab::character::Report;
use vq_chartab::export::TableDocument;
use vq_chartab::selftest::SelftestOutcome;

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn fmt_mat(e: [u32; 4]) -> String {
    format!("[[{},{}],[{},{}]]", e[0], e[1], e[2], e[3])
}

/// Human-readable verdict laid out in proof order: stabilizer,
/// irreducibility, indicator, containment.
pub fn report_text(r: &Report) -> String {
    let p = r.prime;
    let b = &r.indicator_breakdown;
    let mut s = String::new();
    let _ = writeln!(s, "p = {p}, λ = λ({},{})", r.label[0], r.label[1]);
    let _ = writeln!(
        s,
        "G = V ⋊ Q, |V| = {}, |Q| = 8, |G| = {}, {} classes",
        b.v_order, r.group_order, r.class_count
    );
    let _ = writeln!(
        s,
        "Q = <X, Y>, X = {}, Y = {}, z = -I",
        fmt_mat(r.quaternion.x),
        fmt_mat(r.quaternion.y)
    );
    let _ = writeln!(s);
    let _ = writeln!(
        s,
        "stabilizer      λ^z = conj(λ) ≠ λ: {}; |Q_λ| = {}  [{}]",
        r.z_conjugates_label,
        r.stabilizer_order,
        mark(r.z_conjugates_label && r.stabilizer_order == 1)
    );
    let _ = writeln!(
        s,
        "irreducibility  χ = λ^G = {} of degree {}, <χ, χ> = {}  [{}]",
        r.chi_row,
        r.chi_degree,
        r.chi_norm,
        mark(r.claims.irreducible)
    );
    let _ = writeln!(
        s,
        "vanishing       χ(g) = 0 for g ∉ V  [{}]",
        mark(r.chi_vanishes_off_v)
    );
    let _ = writeln!(
        s,
        "square locus    {{g : g² ∈ V}} = V<z>: {}, size {} = 2·{p}²  [{}]",
        r.checks.square_locus.equals_h,
        r.checks.square_locus.size,
        mark(r.checks.square_locus.holds)
    );
    let _ = writeln!(
        s,
        "indicator       ν₂(χ) = (|V|χ(1) + |V|[χ_V, 1_V]) / |G| = ({} + {}) / {} = {}",
        b.v_times_degree, b.v_times_restriction, b.group_order, b.value
    );
    let _ = writeln!(
        s,
        "                class formula {}, element-wise {}  [{}]",
        r.nu2,
        r.nu2_direct,
        mark(r.claims.indicator_one)
    );
    let _ = writeln!(
        s,
        "containment     [χ², ψ] = {}, ν₂(ψ) = {}  [{}]",
        r.psi_multiplicity,
        r.psi_indicator,
        mark(r.claims.contains_psi)
    );
    let decomposition: Vec<String> = r
        .tensor_square
        .iter()
        .filter(|m| m.multiplicity > 0)
        .map(|m| format!("{}·{}", m.multiplicity, m.name))
        .collect();
    let _ = writeln!(s, "                χ² = {}", decomposition.join(" + "));
    let c = &r.checks;
    let _ = writeln!(
        s,
        "checks          orthogonality {}/{}, Σ deg² {}, sum rule {} = 1 + {p}² {}, (vz)² = 1 {}",
        mark(c.first_orthogonality),
        mark(c.second_orthogonality),
        mark(c.degree_sum),
        c.sum_rule.indicator_degree_sum,
        mark(c.sum_rule.holds),
        mark(c.vz_involutions)
    );
    let _ = writeln!(s, "verdict: {}", if r.pass { "PASS" } else { "FAIL" });
    s
}

/// `n:c0;c1;…` with each coefficient as `a` or `a/b`.
pub fn cyclotomic_cell(v: &Cyclotomic) -> String {
    let coeffs: Vec<String> = v.coeffs().iter().map(ToString::to_string).collect();
    format!("{}:{}", v.order(), coeffs.join(";"))
}

pub fn table_text(doc: &TableDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "(C_{p} x C_{p}) ⋊ Q8, |G| = {}, {} classes, z = ζ_{p}",
        doc.group_order,
        doc.classes.len(),
        p = doc.prime
    );
    let _ = writeln!(s);
    let _ = writeln!(s, "classes");
    for (k, c) in doc.classes.iter().enumerate() {
        let rep: Vec<String> = c.rep.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            s,
            "  K{k:<3} rep ({})  size {}  centralizer {}",
            rep.join(","),
            c.size,
            c.centralizer
        );
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "characters");
    let width = doc
        .characters
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    for c in &doc.characters {
        let values: Vec<String> = c.values.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            s,
            "  {:<width$}  deg {:>3}  ν₂ {:>2}  {}",
            c.name,
            c.degree,
            c.indicator,
            values.join(" | ")
        );
    }
    s
}

pub fn table_csv(doc: &TableDocument) -> String {
    let mut s = String::from("name,degree,indicator");
    for k in 0..doc.classes.len() {
        let _ = write!(s, ",K{k}");
    }
    s.push('\n');
    for c in &doc.characters {
        let _ = write!(s, "{},{},{}", c.name, c.degree, c.indicator);
        for v in &c.values {
            let _ = write!(s, ",{}", cyclotomic_cell(v));
        }
        s.push('\n');
    }
    s
}

pub fn report_csv(reports: &[Report]) -> String {
    let mut s = String::from(
        "prime,label,group_order,class_count,chi,chi_norm,nu2,nu2_direct,psi_multiplicity,pass\n",
    );
    for r in reports {
        let _ = writeln!(
            s,
            "{},\"{},{}\",{},{},{},{},{},{},{},{}",
            r.prime,
            r.label[0],
            r.label[1],
            r.group_order,
            r.class_count,
            r.chi_row,
            r.chi_norm,
            r.nu2,
            r.nu2_direct,
            r.psi_multiplicity,
            r.pass
        );
    }
    s
}

pub fn selftest_text(out: &SelftestOutcome) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "selftest p = {}", out.prime);
    for c in &out.checks {
        let _ = writeln!(s, "  [{}] {}: {}", mark(c.passed), c.name, c.detail);
    }
    let passed = out.checks.iter().filter(|c| c.passed).count();
    let _ = writeln!(
        s,
        "{passed}/{} checks passed in {:.0} ms",
        out.checks.len(),
        out.elapsed_ms
    );
    s
}
