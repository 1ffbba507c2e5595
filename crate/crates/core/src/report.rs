//! Full analysis of one complex: invariants, predictions, brute-force oracle
//! values and the checks comparing them.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{self, Invariants, Mode};
use crate::classify::SingularityReport;
use crate::complex::{label_cmp, FVector, GVector, HVector, SimplicialComplex};
use crate::data;
use crate::error::{Error, Result};
use crate::face_ring::{sampled_reduction, GenericHPrime, SampledReduction};
use crate::formulas::{self, HPrimePrediction, Method};
use crate::homology::{BettiTable, KernelCokernelTable};
use crate::linalg::FieldSpec;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedPrecondition,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedPrecondition => "skipped-precondition",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Check {
    pub name: String,
    /// The identity or inequality being tested.
    pub statement: String,
    pub status: Status,
    pub predicted: Value,
    pub actual: Value,
    /// The violated precondition for skipped checks, otherwise context.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Evaluated under `--force` outside the formula's hypotheses. Such
    /// checks never make the report fail.
    #[serde(default)]
    pub out_of_hypothesis: bool,
}

impl Check {
    fn compare<T: Serialize + PartialEq>(name: &str, statement: &str, predicted: T, actual: T) -> Self {
        Check {
            name: name.into(),
            statement: statement.into(),
            status: Status::of(predicted == actual),
            predicted: json!(predicted),
            actual: json!(actual),
            note: None,
            out_of_hypothesis: false,
        }
    }

    fn verdict(name: &str, statement: &str, ok: bool, predicted: Value, actual: Value) -> Self {
        Check {
            name: name.into(),
            statement: statement.into(),
            status: Status::of(ok),
            predicted,
            actual,
            note: None,
            out_of_hypothesis: false,
        }
    }

    fn skipped(name: &str, statement: &str, why: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            statement: statement.into(),
            status: Status::SkippedPrecondition,
            predicted: Value::Null,
            actual: Value::Null,
            note: Some(why.into()),
            out_of_hypothesis: false,
        }
    }

    fn outside(mut self, outside: bool) -> Self {
        self.out_of_hypothesis = outside;
        if outside {
            self.note = Some("evaluated outside the hypotheses".into());
        }
        self
    }

    /// A failure that counts against the exit code.
    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail && !self.out_of_hypothesis
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VertexBetti {
    pub vertex: String,
    pub betti: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SkippedMethod {
    pub method: Method,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HPrimeSection {
    pub bruteforce: Option<GenericHPrime>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bruteforce_error: Option<String>,
    pub predictions: Vec<HPrimePrediction>,
    pub skipped: Vec<SkippedMethod>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SocleSection {
    pub sample: Option<SampledReduction>,
    /// Lower bounds for `0 <= i < d-1`, when the bound applies.
    pub bounds: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationSection {
    #[serde(flatten)]
    pub report: SingularityReport,
    pub singular_labels: Vec<String>,
    pub pseudomanifold_singular_labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub complex_id: String,
    /// Facets as label lists; enough to rebuild the complex.
    pub facets: Vec<Vec<String>>,
    pub field: FieldSpec,
    pub seed: u64,
    pub trials: usize,
    pub f_vector: FVector,
    pub h_vector: HVector,
    pub g_vector: GVector,
    pub betti: BettiTable,
    pub link_betti: Vec<VertexBetti>,
    pub kc_table: KernelCokernelTable,
    pub punctured_betti: BettiTable,
    pub h_prime: HPrimeSection,
    pub socle: SocleSection,
    pub classification: ClassificationSection,
    pub checks: Vec<Check>,
}

impl AnalysisReport {
    pub fn complex(&self) -> Result<SimplicialComplex> {
        let text: String = self.facets.iter().map(|f| f.join(" ") + "\n").collect();
        Ok(SimplicialComplex::parse(&text)?)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_failure())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// 0 when no check failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub field: FieldSpec,
    pub seed: u64,
    pub trials: usize,
    pub mode: Mode,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            field: FieldSpec::default(),
            seed: 0,
            trials: 3,
            mode: Mode::Enforce,
        }
    }
}

const PREDICTED_METHODS: [Method; 4] = [Method::Schenzel, Method::His, Method::Topological, Method::Depth];

pub fn analyze(id: &str, k: &SimplicialComplex, opts: &ReportOptions) -> Result<AnalysisReport> {
    let inv = Invariants::compute(k, opts.field, opts.seed);
    let large = opts.field.is_large();

    let (bruteforce, bruteforce_error) = if large {
        match analysis::bruteforce_hprime(k, opts.field, opts.seed, opts.trials) {
            Ok(g) => (Some(g), None),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        (None, Some(format!("field {} is too small for a generic choice", opts.field)))
    };
    let sample = if large {
        sampled_reduction(k, opts.field, opts.seed).ok()
    } else {
        None
    };

    let mut predictions = Vec::new();
    let mut skipped = Vec::new();
    for method in PREDICTED_METHODS {
        match analysis::hprime_prediction(&inv, method, opts.mode).expect("closed form") {
            Ok(p) => predictions.push(p),
            Err(e) => skipped.push(SkippedMethod {
                method,
                reason: e.0,
            }),
        }
    }
    let bounds = analysis::socle_lower_bounds(&inv, opts.mode).ok();

    let mut checks = Vec::new();
    structural_checks(k, &inv, &mut checks);
    formula_checks(&inv, opts.mode, &mut checks);
    oracle_checks(
        &inv,
        bruteforce.as_ref(),
        sample.as_ref(),
        &predictions,
        &skipped,
        bounds.as_ref(),
        &mut checks,
    );

    let labels = |vs: &[u32]| {
        let mut ls: Vec<String> = vs.iter().map(|&v| k.label(v).to_string()).collect();
        ls.sort_by(|a, b| label_cmp(a, b));
        ls
    };
    let classification = ClassificationSection {
        singular_labels: labels(&inv.classification.singular_vertices),
        pseudomanifold_singular_labels: labels(&inv.classification.pseudomanifold_singular_vertices),
        report: inv.classification.clone(),
    };
    let mut link_betti: Vec<VertexBetti> = k
        .vertices()
        .map(|v| VertexBetti {
            vertex: k.label(v).to_string(),
            betti: inv.link_betti[v as usize].values.clone(),
        })
        .collect();
    link_betti.sort_by(|a, b| label_cmp(&a.vertex, &b.vertex));
    let h = inv.h.clone();
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        complex_id: id.to_string(),
        facets: k.label_facets(),
        field: opts.field,
        seed: opts.seed,
        trials: opts.trials,
        f_vector: inv.f.clone(),
        g_vector: h.g_vector(),
        h_vector: h,
        betti: inv.betti.clone(),
        link_betti,
        kc_table: inv.kc.clone(),
        punctured_betti: inv.punctured.clone(),
        h_prime: HPrimeSection {
            bruteforce,
            bruteforce_error,
            predictions,
            skipped,
        },
        socle: SocleSection {
            sample,
            bounds: bounds.map(|(b, _)| b),
        },
        classification,
        checks,
    })
}

fn structural_checks(k: &SimplicialComplex, inv: &Invariants, out: &mut Vec<Check>) {
    let d = inv.d as isize;
    out.push(Check::compare(
        "h-endpoints",
        "h_0 = 1 and h_d = (-1)^(d-1) χ̃(Δ)",
        vec![1, formulas::sign(d as i64 - 1) * inv.euler],
        vec![inv.h.get(0), inv.h.get(d)],
    ));
    out.push(match k.short_h_identity_check() {
        Ok(rows) => Check::compare(
            "short-h-identity",
            "i h_i + (d-i+1) h_(i-1) = sum_v h_(i-1)(lk v) for 1 <= i <= d",
            vec![true; rows.len()],
            rows,
        ),
        Err(e) => Check::skipped(
            "short-h-identity",
            "i h_i + (d-i+1) h_(i-1) = sum_v h_(i-1)(lk v) for 1 <= i <= d",
            e.to_string(),
        ),
    });
    out.push(Check::compare(
        "betti-euler",
        "χ̃(Δ) = sum_i (-1)^i β̃_i(Δ)",
        inv.euler,
        inv.betti.euler_char(),
    ));

    let mut predicted = Vec::new();
    let mut actual = Vec::new();
    for (v, rel) in inv.relative_dims.iter().enumerate() {
        for (j, &dim) in rel.iter().enumerate() {
            actual.push(dim);
            predicted.push(inv.link_betti[v].get(j as isize - 2));
        }
    }
    out.push(Check::compare(
        "relative-cohomology-links",
        "dim H^i(Δ, cost v) = β̃_(i-1)(lk v) for every vertex v",
        predicted,
        actual,
    ));

    let degrees: Vec<isize> = (-1..d).collect();
    out.push(Check::compare(
        "kernel-cokernel-balance",
        "𝒞_j - 𝒦_j = β̃_j(Δ) - sum_v β̃_(j-1)(lk v) for θ = sum_v x_v",
        degrees
            .iter()
            .map(|&j| inv.betti.get(j) as i64 - formulas::link_sum(&inv.link_betti, j - 1))
            .collect::<Vec<_>>(),
        degrees
            .iter()
            .map(|&j| inv.kc.cokernel(j) as i64 - inv.kc.kernel(j) as i64)
            .collect(),
    ));

    let c = &inv.classification;
    out.push(Check::compare(
        "hierarchy",
        "homology sphere => CM; homology manifold => Buchsbaum => isolated singularities; pure CM => Buchsbaum",
        vec![true; 4],
        vec![
            !c.homology_sphere || c.cm,
            !c.homology_manifold || c.buchsbaum,
            !c.buchsbaum || c.isolated_singularities,
            !(c.pure && c.cm) || c.buchsbaum,
        ],
    ));
    let statement = "skeleton depth equals the depth read off β̃(Δ) and β̃(lk v)";
    out.push(if c.isolated_singularities {
        Check::compare("depth-criteria", statement, c.depth_homological, c.depth)
    } else {
        Check::skipped("depth-criteria", statement, "complex does not have isolated singularities")
    });
}

fn formula_checks(inv: &Invariants, mode: Mode, out: &mut Vec<Check>) {
    let d = inv.d;
    let c = &inv.classification;

    let statement = "𝒦_j + 𝒞_(j-1) = β̃_(j-1)(X - Σ) for j < d-1";
    out.push(if c.homologically_isolated == Some(true) || mode == Mode::Force {
        let js: Vec<isize> = (0..d as isize - 1).collect();
        Check::compare(
            "punctured-homology",
            statement,
            js.iter()
                .map(|&j| inv.kc.kernel(j) + inv.kc.cokernel(j - 1))
                .collect::<Vec<_>>(),
            js.iter().map(|&j| inv.punctured.get(j - 1)).collect(),
        )
        .outside(c.homologically_isolated != Some(true))
    } else {
        Check::skipped("punctured-homology", statement, "singularities are not homologically isolated")
    });

    let statement = "h_(d-i) = h_i + (-1)^(i-1) C(d,i)(1 + (-1)^d χ̃(Δ)) + (-1)^i C(d-1,i-1) sum_v (1 + (-1)^(d-1) χ̃(lk v))";
    out.push(match analysis::dehn_sommerville(inv, mode) {
        Ok((ds, ok)) => Check::verdict(
            "dehn-sommerville",
            statement,
            ds.holds(),
            json!(ds.rows.iter().map(|r| r.predicted).collect::<Vec<_>>()),
            json!(ds.rows.iter().map(|r| r.actual).collect::<Vec<_>>()),
        )
        .outside(!ok),
        Err(e) => Check::skipped("dehn-sommerville", statement, e.0),
    });

    let statement = "sum_v (1 + (-1)^(d-1) χ̃(lk v)) = 2 χ(Δ) for even d";
    out.push(if !d.is_multiple_of(2) {
        Check::skipped("link-euler-even", statement, "d is odd")
    } else if !c.pseudomanifold_isolated && mode == Mode::Enforce {
        Check::skipped(
            "link-euler-even",
            statement,
            "complex is not a pseudomanifold with isolated singularities",
        )
    } else {
        Check::compare(
            "link-euler-even",
            statement,
            2 * (inv.euler + 1),
            formulas::link_euler_sum(d, &inv.link_euler),
        )
        .outside(!c.pseudomanifold_isolated)
    });

    let statement = "g_2 >= C(d+1,2)[β̃_(d-2) - β̃_(d-1) + 1] + d 𝒦_(d-2) - d sum_v [β̃_(d-3)(lk v) - β̃_(d-2)(lk v) + 1]";
    out.push(match analysis::g2_lower_bound(inv, mode) {
        Ok((bound, ok)) => {
            let g2 = inv.h.get(2) - inv.h.get(1);
            Check::verdict("g2-lower-bound", statement, g2 >= bound, json!(bound), json!(g2)).outside(!ok)
        }
        Err(e) => Check::skipped("g2-lower-bound", statement, e.0),
    });
}

fn oracle_checks(
    inv: &Invariants,
    brute: Option<&GenericHPrime>,
    sample: Option<&SampledReduction>,
    predictions: &[HPrimePrediction],
    skipped: &[SkippedMethod],
    bounds: Option<&(Vec<i64>, bool)>,
    out: &mut Vec<Check>,
) {
    let d = inv.d;
    let no_oracle = format!("no brute-force h' over {}", inv.field);
    let brute_values: Option<Vec<i64>> = brute.map(|g| g.values.iter().map(|&x| x as i64).collect());

    for method in PREDICTED_METHODS {
        let name = format!("hprime-{}", method.name());
        let statement = format!("{} prediction of h' equals brute force", method.name());
        let check = if let Some(p) = predictions.iter().find(|p| p.method == method) {
            match &brute_values {
                Some(b) => Check::compare(&name, &statement, p.values.clone(), b.clone()).outside(!p.in_hypothesis),
                None => Check::skipped(&name, &statement, no_oracle.clone()),
            }
        } else {
            let reason = skipped
                .iter()
                .find(|s| s.method == method)
                .map_or_else(String::new, |s| s.reason.clone());
            Check::skipped(&name, &statement, reason)
        };
        out.push(check);
    }

    let statement = "the two singular-vertex predictions of h' agree";
    let find = |m| predictions.iter().find(|p| p.method == m);
    out.push(match (find(Method::His), find(Method::Topological)) {
        (Some(a), Some(b)) => Check::compare("his-equals-topological", statement, a.values.clone(), b.values.clone())
            .outside(!a.in_hypothesis || !b.in_hypothesis),
        _ => Check::skipped(
            "his-equals-topological",
            statement,
            "singularities are not homologically isolated",
        ),
    });

    let statement = "h'_d = β̃_(d-1)(Δ)";
    out.push(match &brute_values {
        Some(b) => Check::compare("hprime-top-betti", statement, inv.betti.get(d as isize - 1) as i64, b[d]),
        None => Check::skipped("hprime-top-betti", statement, no_oracle.clone()),
    });

    let statement = "h' = h for a CM complex";
    out.push(match (&brute_values, inv.classification.cm) {
        (_, false) => Check::skipped("hprime-cm", statement, "complex is not CM"),
        (None, true) => Check::skipped("hprime-cm", statement, no_oracle.clone()),
        (Some(b), true) => Check::compare("hprime-cm", statement, inv.h.0.clone(), b.clone()),
    });

    let statement = "h'_(i+1) <= (h'_i)^<i> for i >= 1";
    out.push(match &brute_values {
        Some(b) => {
            let growth: Vec<i64> = (1..d)
                .map(|i| formulas::macaulay_max_growth(b[i] as u64, i as u64) as i64)
                .collect();
            let next: Vec<i64> = (2..=d).map(|i| b[i]).collect();
            let ok = growth.iter().zip(&next).all(|(g, n)| n <= g);
            Check::verdict("hprime-macaulay", statement, ok, json!(growth), json!(next))
        }
        None => Check::skipped("hprime-macaulay", statement, no_oracle.clone()),
    });

    let statement = "dim Soc_i >= C(d,i) β̃_(i-1) + C(d-1,i)(𝒦_i + 𝒦_(i-1) - sum_v β̃_(i-2)(lk v)) for i < d-1";
    out.push(match (bounds, sample) {
        (None, _) => Check::skipped("socle-lower-bound", statement, "singularities are not homologically isolated"),
        (Some(_), None) => Check::skipped("socle-lower-bound", statement, no_oracle.clone()),
        (Some((b, ok)), Some(s)) => {
            let dims: Vec<i64> = s.socle.0.iter().take(b.len()).map(|&x| x as i64).collect();
            let holds = b.iter().zip(&dims).all(|(lo, x)| x >= lo);
            Check::verdict("socle-lower-bound", statement, holds, json!(b), json!(dims)).outside(!ok)
        }
    });

    let statement = "dim Soc_i <= h'_i";
    out.push(match sample {
        Some(s) => Check::verdict(
            "socle-within-hprime",
            statement,
            s.socle.0.iter().zip(&s.hilbert).all(|(a, b)| a <= b),
            json!(s.hilbert),
            json!(s.socle.0),
        ),
        None => Check::skipped("socle-within-hprime", statement, no_oracle),
    });

    let statement = "sum_i h'_i = sum_i h_i for a CM complex";
    if let (Some(s), true) = (sample, inv.classification.cm) {
        let total: i64 = inv.h.0.iter().sum();
        let sum: usize = s.hilbert.iter().sum();
        out.push(Check::compare("sample-length-cm", statement, total, sum as i64));
    }
}

/// Reads a `.cplx` path, or a bundled complex written `data:<name>`.
pub fn load_input(path: &str) -> Result<(String, SimplicialComplex)> {
    if let Some(name) = path.strip_prefix("data:") {
        return Ok((name.to_string(), data::load(name)?));
    }
    let text = std::fs::read_to_string(path)?;
    let id = std::path::Path::new(path)
        .file_stem()
        .map_or_else(|| path.to_string(), |s| s.to_string_lossy().into_owned());
    Ok((id, SimplicialComplex::parse(&text).map_err(Error::from)?))
}

/// Analyzes every bundled complex.
pub fn verify_all(opts: &ReportOptions) -> Result<Vec<AnalysisReport>> {
    data::list()
        .iter()
        .map(|ds| analyze(ds.name, &ds.load(), opts))
        .collect()
}

fn fmt_list<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn fmt_value(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Plain-text rendering of a report.
pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let c = &r.classification.report;
    let _ = writeln!(s, "complex  {}  (field {}, seed {}, trials {})", r.complex_id, r.field, r.seed, r.trials);
    let _ = writeln!(s, "f        {}", fmt_list(&r.f_vector.0));
    let _ = writeln!(s, "h        {}", fmt_list(&r.h_vector.0));
    let _ = writeln!(s, "g        {}", fmt_list(&r.g_vector.0));
    let _ = writeln!(s, "betti    {}  (degrees -1..)", fmt_list(&r.betti.values));
    let _ = writeln!(
        s,
        "K / C    {}",
        r.kc_table
            .entries
            .iter()
            .map(|e| format!("{}:{}/{}", e.degree, e.kernel, e.cokernel))
            .collect::<Vec<_>>()
            .join("  ")
    );
    let _ = writeln!(s, "X - Σ    {}", fmt_list(&r.punctured_betti.values));
    let flags = [
        ("pure", c.pure),
        ("pseudomanifold", c.pseudomanifold),
        ("normal", c.normal),
        ("cm", c.cm),
        ("sphere", c.homology_sphere),
        ("manifold", c.homology_manifold),
        ("buchsbaum", c.buchsbaum),
        ("isolated", c.isolated_singularities),
        ("pm-isolated", c.pseudomanifold_isolated),
    ];
    let on: Vec<&str> = flags.iter().filter(|(_, b)| *b).map(|(n, _)| *n).collect();
    let _ = writeln!(s, "class    {}", on.join(" "));
    let his = match c.homologically_isolated {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    };
    let _ = writeln!(
        s,
        "singular {}  (not a sphere link: {})  homologically isolated: {his}  depth {}",
        fmt_list(&r.classification.singular_labels),
        fmt_list(&r.classification.pseudomanifold_singular_labels),
        c.depth
    );
    if let Some(b) = &r.h_prime.bruteforce {
        let _ = writeln!(s, "h'       {}  brute force, stable: {}", fmt_list(&b.values), b.stable);
    }
    for p in &r.h_prime.predictions {
        let tag = if p.in_hypothesis { "" } else { "  [out-of-hypothesis]" };
        let _ = writeln!(s, "h' {:<12} {}{tag}", p.method.name(), fmt_list(&p.values));
    }
    if let Some(sample) = &r.socle.sample {
        let _ = writeln!(s, "socle    {}", fmt_list(&sample.socle.0));
    }
    let _ = writeln!(s, "checks");
    for ch in &r.checks {
        let status = if ch.out_of_hypothesis {
            format!("{} (out-of-hypothesis)", ch.status.as_str())
        } else {
            ch.status.as_str().to_string()
        };
        let detail = match ch.status {
            Status::SkippedPrecondition => ch.note.clone().unwrap_or_default(),
            _ => format!("predicted {} actual {}", fmt_value(&ch.predicted), fmt_value(&ch.actual)),
        };
        let _ = writeln!(s, "  {:<28} {:<30} {detail}", ch.name, status);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn broken_skips_dehn_sommerville() {
        let k = data::load("broken").unwrap();
        let r = analyze("broken", &k, &ReportOptions::default()).unwrap();
        assert!(!r.classification.report.pseudomanifold);
        assert_eq!(r.check("dehn-sommerville").unwrap().status, Status::SkippedPrecondition);
        assert!(r.passed());
    }

    #[test]
    fn small_field_skips_oracle() {
        let k = data::load("octahedron").unwrap();
        let opts = ReportOptions {
            field: FieldSpec::Prime(2),
            ..Default::default()
        };
        let r = analyze("octahedron", &k, &opts).unwrap();
        assert!(r.h_prime.bruteforce.is_none());
        assert_eq!(r.check("hprime-schenzel").unwrap().status, Status::SkippedPrecondition);
        assert!(r.passed());
    }

    #[test]
    fn forced_failures_do_not_count() {
        let k = data::load("necklace").unwrap();
        let opts = ReportOptions {
            mode: Mode::Force,
            ..Default::default()
        };
        let r = analyze("necklace", &k, &opts).unwrap();
        let his = r.check("hprime-his").unwrap();
        assert_eq!(his.status, Status::Fail);
        assert!(his.out_of_hypothesis);
        assert!(r.passed());
    }
}
