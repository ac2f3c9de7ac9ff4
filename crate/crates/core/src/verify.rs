//! Named cross-check suites.  Each suite bundles a batch of assertions
//! — frozen tables, coefficient-change comparisons, reduction soundness,
//! product structure — and reports one pass/fail line per check.  The
//! command-line `verify` subcommand and the acceptance tests both drive
//! these, so a green suite means the same thing everywhere.

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};

use crate::chain::{
    build_ce_complex, simplicial_chain_complex, BuildOptions, ChainComplex, ComplexKind,
};
use crate::cup::{verify_exterior_algebra, ExteriorAlgebraReport, ProductEntry};
use crate::homology::{
    betti_mod_p_from_integral, homology_over_field, homology_over_Z, HomologyModule,
};
use crate::lie::LieAlgebra;
use crate::morse::{
    critical_vertices, gradient_flow_boundary, gradient_path_contributions,
    normalization_matching, normalization_reduce, normalized_complex_direct, reduce_by_matching,
    star_matching, validate_matching, MatchedPair, Matching, MatchingStatus,
};
use crate::poset::Poset;
use crate::reference::{self, binomial};
use crate::ring::CoefficientRing;
use crate::subcomplex::{
    integral_p_complex_homology, predicted_mod_p_dims, verify_tensor_factorization,
};

/// One assertion, named so a failure is traceable without a debugger.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> CheckLine {
        CheckLine { name: name.into(), passed: true, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> CheckLine {
        CheckLine { name: name.into(), passed: false, detail: detail.into() }
    }

    pub fn of(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckLine {
        CheckLine { name: name.into(), passed, detail: detail.into() }
    }

    pub fn render(&self) -> String {
        let tag = if self.passed { "[ ok ]" } else { "[FAIL]" };
        if self.detail.is_empty() {
            format!("{tag} {}", self.name)
        } else {
            format!("{tag} {}: {}", self.name, self.detail)
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub lines: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    /// `(passed, failed)` counts.
    pub fn counts(&self) -> (usize, usize) {
        let p = self.lines.iter().filter(|l| l.passed).count();
        (p, self.lines.len() - p)
    }

    pub fn render(&self) -> String {
        let mut out = vec![format!("suite {}", self.suite)];
        for l in &self.lines {
            out.push(format!("  {}", l.render()));
        }
        let (p, f) = self.counts();
        out.push(format!("suite {}: {p} passed, {f} failed", self.suite));
        out.join("\n")
    }
}

pub fn suite_names() -> &'static [&'static str] {
    &["tables", "uct", "tensor", "cup", "matching", "conjecture-probe"]
}

/// Dispatch by suite name; `None` for an unknown name.  Without an
/// explicit `probe_m` the torsion probe walks a default list.
pub fn run_suite(name: &str, ws: &Workspace, probe_m: Option<u64>) -> Option<SuiteReport> {
    match name {
        "tables" => Some(tables_suite(ws)),
        "uct" => Some(uct_suite(ws)),
        "tensor" => Some(tensor_suite()),
        "cup" => Some(cup_suite()),
        "matching" => Some(matching_suite()),
        "conjecture-probe" => {
            let ms: Vec<u64> = match probe_m {
                Some(m) => vec![m],
                None => vec![2, 3, 4, 5],
            };
            Some(conjecture_probe_suite(&ms))
        }
        _ => None,
    }
}

// ---------------------------------------------------------------------
// Shared artifacts
// ---------------------------------------------------------------------

/// Lazily computed artifacts shared across suites.  The integral
/// homology of `sol(5)` and of the bipartite poset dominate run time,
/// so each is computed at most once per process.
pub struct Workspace {
    sol: [OnceLock<Vec<HomologyModule>>; 5],
    diamond: OnceLock<Vec<HomologyModule>>,
    bipartite: OnceLock<Vec<HomologyModule>>,
}

impl Workspace {
    pub fn new() -> Workspace {
        Workspace {
            sol: std::array::from_fn(|_| OnceLock::new()),
            diamond: OnceLock::new(),
            bipartite: OnceLock::new(),
        }
    }

    /// Integral homology of `sol(n)`: brute force on the full complex
    /// for small `n`, via the normalization retraction for `n = 5`.
    pub fn sol_integral(&self, n: usize) -> &[HomologyModule] {
        assert!((1..=5).contains(&n), "only n <= 5 is cached");
        self.sol[n - 1]
            .get_or_init(|| integral_modules(Arc::new(LieAlgebra::sol(n)), n >= 5))
    }

    pub fn diamond_integral(&self) -> &[HomologyModule] {
        self.diamond.get_or_init(|| {
            integral_modules(Arc::new(LieAlgebra::gl_poset(&reference::diamond(), false)), false)
        })
    }

    pub fn bipartite_integral(&self) -> &[HomologyModule] {
        self.bipartite.get_or_init(|| {
            integral_modules(
                Arc::new(LieAlgebra::gl_poset(&reference::complete_bipartite(), false)),
                true,
            )
        })
    }
}

impl Default for Workspace {
    fn default() -> Self {
        Self::new()
    }
}

fn integral_modules(g: Arc<LieAlgebra>, reduce_first: bool) -> Vec<HomologyModule> {
    let ring = CoefficientRing::Integers;
    let c = if reduce_first {
        normalized_complex_direct(g, &ring, BuildOptions::default())
            .expect("basis has all diagonals")
    } else {
        build_ce_complex(g, &ring).expect("within the size cap")
    };
    homology_over_Z(&c)
        .expect("coefficients are integral")
        .modules()
        .expect("integral table")
        .to_vec()
}

/// Random poset on `n` elements: each ascending pair is declared
/// comparable with probability 1/2, then everything is closed
/// transitively.  Ascending pairs cannot form a cycle, so this always
/// succeeds, and a seeded generator makes the draw reproducible.
pub fn random_poset(n: usize, rng: &mut impl Rng) -> Poset {
    let mut relations = Vec::new();
    for a in 1..=n {
        for b in (a + 1)..=n {
            if rng.random_bool(0.5) {
                relations.push((a, b));
            }
        }
    }
    Poset::from_cover_relations(n, &relations).expect("ascending pairs are acyclic")
}

// ---------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------

fn compare_modules(name: String, expected: &[HomologyModule], got: &[HomologyModule]) -> CheckLine {
    if expected == got {
        return CheckLine::pass(name, format!("{} degrees", expected.len()));
    }
    if expected.len() != got.len() {
        return CheckLine::fail(
            name,
            format!("expected {} degrees, got {}", expected.len(), got.len()),
        );
    }
    let k = (0..expected.len()).find(|&k| expected[k] != got[k]).unwrap();
    CheckLine::fail(
        name,
        format!("degree {k}: expected {}, got {}", expected[k].render(), got[k].render()),
    )
}

fn compare_dims(name: String, expected: &[usize], got: &[usize]) -> CheckLine {
    if expected == got {
        CheckLine::pass(name, format!("dims {}", render_dims(expected)))
    } else {
        CheckLine::fail(
            name,
            format!("expected {}, got {}", render_dims(expected), render_dims(got)),
        )
    }
}

fn render_dims(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn field_dims_full(g: LieAlgebra, p: u64) -> Vec<usize> {
    let ring = CoefficientRing::modular(p).expect("prime modulus");
    let c = build_ce_complex(Arc::new(g), &ring).expect("within the size cap");
    homology_over_field(&c).expect("field coefficients").dims()
}

fn facet_list(spec: &[&[&str]]) -> Vec<Vec<String>> {
    spec.iter().map(|f| f.iter().map(|s| s.to_string()).collect()).collect()
}

/// `(degree, basis id)` of a simplex given by vertex names, in a
/// non-reduced simplicial complex.
fn simplex_id(c: &ChainComplex, names: &[&str]) -> (usize, u32) {
    let vertices = match c.kind() {
        ComplexKind::Simplicial { vertices } => vertices,
        _ => panic!("simplicial fixture expected"),
    };
    let mut mask = 0u64;
    for name in names {
        let p = vertices.iter().position(|v| v == name).expect("vertex exists");
        mask |= 1 << p;
    }
    let k = names.len() - 1;
    let ws = c.wedges(k).expect("wedge basis");
    let id = ws.iter().position(|w| w.bits() == mask).expect("simplex exists") as u32;
    (k, id)
}

// ---------------------------------------------------------------------
// Suite: tables
// ---------------------------------------------------------------------

/// Computed homology against the frozen reference tables: integral
/// columns of the triangular family, dimension profiles over small
/// prime fields, integral columns of the weight subcomplexes, and a
/// handful of closed-form and corner checks.
pub fn tables_suite(ws: &Workspace) -> SuiteReport {
    let mut lines = Vec::new();

    for n in 1..=5 {
        let expected = reference::triangular_integral_homology(n).expect("tabulated for n <= 6");
        lines.push(compare_modules(
            format!("sol{n}: integral homology"),
            &expected,
            ws.sol_integral(n),
        ));
    }

    let mut formula_cases: Vec<(usize, u64)> = Vec::new();
    for p in [2u64, 3] {
        for n in 2..=6 {
            formula_cases.push((n, p));
        }
    }
    formula_cases.push((6, 5));
    for (n, p) in formula_cases {
        let kmax = n * (n + 1) / 2;
        let expected = reference::mod_p_dimensions(n, p, kmax).expect("tabulated");
        let name = format!("sol{n} mod {p}: dimension profile");
        match predicted_mod_p_dims(&Poset::chain(n), p, kmax) {
            Ok(got) => lines.push(compare_dims(name, &expected, &got)),
            Err(e) => lines.push(CheckLine::fail(name, e.to_string())),
        }
    }

    for n in 2..=5 {
        for p in [2u64, 3, 5] {
            let expected = reference::strict_subcomplex_homology(n, p).expect("tabulated");
            let name = format!("nil{n} weight-{p} subcomplex: integral homology");
            match integral_p_complex_homology(&Poset::chain(n), p, true) {
                Ok(t) => lines.push(compare_modules(
                    name,
                    &expected,
                    t.modules().expect("integral table"),
                )),
                Err(e) => lines.push(CheckLine::fail(name, e.to_string())),
            }
        }
    }

    let s3p2 = field_dims_full(LieAlgebra::sol(3), 2);
    let s3p3 = field_dims_full(LieAlgebra::sol(3), 3);
    let s4p2 = field_dims_full(LieAlgebra::sol(4), 2);
    let s4p3 = field_dims_full(LieAlgebra::sol(4), 3);
    let s5p2 = betti_mod_p_from_integral(ws.sol_integral(5), 2);
    let s5p3 = betti_mod_p_from_integral(ws.sol_integral(5), 3);

    let closed3: Vec<usize> =
        (0..=6).map(|k| binomial(3, k) + binomial(3, k - 3)).collect();
    lines.push(compare_dims("sol3 mod 2: closed-form dimensions".into(), &closed3, &s3p2));
    let closed4: Vec<usize> =
        (0..=10).map(|k| binomial(4, k) + binomial(4, k - 5)).collect();
    lines.push(compare_dims("sol4 mod 3: closed-form dimensions".into(), &closed4, &s4p3));

    lines.push(CheckLine::of(
        "sol3 mod 3: top corner vanishes",
        s3p3[6] == 0,
        format!("dim H_6 = {}", s3p3[6]),
    ));
    lines.push(CheckLine::of(
        "sol4 mod 2: upper tail",
        s4p2[8] > 0 && s4p2[9] == 0 && s4p2[10] == 0,
        format!("dims H_8..H_10 = {}, {}, {}", s4p2[8], s4p2[9], s4p2[10]),
    ));
    lines.push(CheckLine::of(
        "sol4 mod 3: upper tail",
        s4p3[9] > 0 && s4p3[10] == 0,
        format!("dims H_9, H_10 = {}, {}", s4p3[9], s4p3[10]),
    ));
    lines.push(CheckLine::of(
        "sol4 mod 2: dim H_3",
        s4p2[3] == binomial(4, 3) + binomial(3, 2),
        format!("dim = {}", s4p2[3]),
    ));
    lines.push(CheckLine::of(
        "sol5 mod 2: dim H_3",
        s5p2[3] == binomial(5, 3) + binomial(4, 2),
        format!("dim = {}", s5p2[3]),
    ));
    lines.push(CheckLine::of(
        "sol5 mod 3: dim H_5",
        s5p3[5] == binomial(5, 5) + binomial(3, 2),
        format!("dim = {}", s5p3[5]),
    ));

    SuiteReport { suite: "tables".into(), lines }
}

// ---------------------------------------------------------------------
// Suite: uct
// ---------------------------------------------------------------------

fn three_route_line(
    label: &str,
    poset: &Poset,
    integral: &[HomologyModule],
    reduce_first: bool,
    p: u64,
) -> CheckLine {
    let name = format!("{label} mod {p}: direct / coefficient / tensor routes");
    let ring = match CoefficientRing::modular(p) {
        Ok(r) => r,
        Err(e) => return CheckLine::fail(name, e.to_string()),
    };
    let g = Arc::new(LieAlgebra::gl_poset(poset, false));
    let built = if reduce_first {
        normalized_complex_direct(g, &ring, BuildOptions::default()).map_err(|e| e.to_string())
    } else {
        build_ce_complex(g, &ring).map_err(|e| e.to_string())
    };
    let c = match built {
        Ok(c) => c,
        Err(e) => return CheckLine::fail(name, e),
    };
    let direct = match homology_over_field(&c) {
        Ok(t) => t.dims(),
        Err(e) => return CheckLine::fail(name, e.to_string()),
    };
    let from_integral = betti_mod_p_from_integral(integral, p);
    let from_tensor = match predicted_mod_p_dims(poset, p, integral.len() - 1) {
        Ok(d) => d,
        Err(e) => return CheckLine::fail(name, e.to_string()),
    };
    if direct == from_integral && from_integral == from_tensor {
        CheckLine::pass(name, format!("dims {}", render_dims(&direct)))
    } else {
        CheckLine::fail(
            name,
            format!(
                "direct {}, from integral {}, from tensor {}",
                render_dims(&direct),
                render_dims(&from_integral),
                render_dims(&from_tensor)
            ),
        )
    }
}

/// Three independent routes to mod-p dimensions — a direct field
/// computation, torsion counting in the integral answer, and the
/// subcomplex tensor prediction — must agree on every test subject.
pub fn uct_suite(ws: &Workspace) -> SuiteReport {
    let mut lines = Vec::new();
    let mut targets: Vec<(String, Poset, &[HomologyModule], bool)> = Vec::new();
    for n in 1..=5 {
        targets.push((format!("sol{n}"), Poset::chain(n), ws.sol_integral(n), n >= 5));
    }
    targets.push(("diamond".into(), reference::diamond(), ws.diamond_integral(), false));
    targets.push((
        "3x3 bipartite".into(),
        reference::complete_bipartite(),
        ws.bipartite_integral(),
        true,
    ));

    for (label, poset, integral, reduce_first) in &targets {
        for p in [2u64, 3, 5] {
            lines.push(three_route_line(label, poset, integral, *reduce_first, p));
        }
    }
    SuiteReport { suite: "uct".into(), lines }
}

// ---------------------------------------------------------------------
// Suite: tensor
// ---------------------------------------------------------------------

/// Entrywise comparison of the reduced mod-p complex with the tensor
/// product of the weight subcomplex and the diagonal part.
pub fn tensor_suite() -> SuiteReport {
    let mut lines = Vec::new();
    let cases: Vec<(&str, Poset)> =
        vec![("chain(4)", Poset::chain(4)), ("diamond", reference::diamond())];
    for (label, poset) in &cases {
        for p in [2u64, 3] {
            let name = format!("{label} mod {p}: reduced complex = subcomplex (x) diagonal part");
            match verify_tensor_factorization(poset, p) {
                Ok(r) if r.all_match() => {
                    lines.push(CheckLine::pass(
                        name,
                        format!("{} degrees, boundaries equal", r.degrees.len()),
                    ));
                }
                Ok(r) => {
                    let bad = r
                        .degrees
                        .iter()
                        .find(|d| d.lhs_dim != d.rhs_dim || !d.boundaries_match)
                        .expect("some degree disagrees");
                    lines.push(CheckLine::fail(
                        name,
                        format!(
                            "degree {}: dims {} vs {}, boundaries {}",
                            bad.degree,
                            bad.lhs_dim,
                            bad.rhs_dim,
                            if bad.boundaries_match { "equal" } else { "differ" }
                        ),
                    ));
                }
                Err(e) => lines.push(CheckLine::fail(name, e.to_string())),
            }
        }
    }
    SuiteReport { suite: "tensor".into(), lines }
}

// ---------------------------------------------------------------------
// Suite: cup
// ---------------------------------------------------------------------

fn exterior_line(name: String, poset: &Poset, ring: &CoefficientRing) -> CheckLine {
    match verify_exterior_algebra(poset, ring) {
        Ok(r) => CheckLine::of(name, r.ok(), r.describe()),
        Err(e) => CheckLine::fail(name, e.to_string()),
    }
}

fn find_entry<'a>(r: &'a ExteriorAlgebraReport, left: &str, right: &str) -> Option<&'a ProductEntry> {
    r.entries.iter().find(|e| e.left == left && e.right == right)
}

/// The ring structure on cohomology: free exterior algebras where the
/// coefficients allow it, plus the extra odd generator in the boundary
/// characteristic.
pub fn cup_suite() -> SuiteReport {
    let mut lines = Vec::new();
    let q = CoefficientRing::Rationals;
    let z5 = CoefficientRing::modular(5).expect("prime");
    let z3 = CoefficientRing::modular(3).expect("prime");

    for n in 2..=5 {
        lines.push(exterior_line(
            format!("chain({n}) over Q"),
            &Poset::chain(n),
            &q,
        ));
    }
    lines.push(exterior_line("chain(5) over Z/5".into(), &Poset::chain(5), &z5));

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 1..=2 {
        let poset = random_poset(5, &mut rng);
        let covers = poset.cover_relations().len();
        lines.push(exterior_line(
            format!("random poset #{i} ({covers} covers) over Q"),
            &poset,
            &q,
        ));
        lines.push(exterior_line(
            format!("random poset #{i} ({covers} covers) over Z/5"),
            &poset,
            &z5,
        ));
    }

    let name = "chain(4) over Z/3: extra generator in degree 5".to_string();
    match verify_exterior_algebra(&Poset::chain(4), &z3) {
        Ok(r) => {
            lines.push(CheckLine::of(
                name,
                r.ok() && r.extra_generator_degree == Some(5),
                r.describe(),
            ));
            let yy = find_entry(&r, "y", "y");
            lines.push(CheckLine::of(
                "chain(4) over Z/3: y * y = 0",
                yy.is_some_and(|e| e.ok && e.rendered == "0"),
                yy.map_or("entry missing".into(), |e| format!("y * y = {}", e.rendered)),
            ));
            let xy = find_entry(&r, "x1", "y");
            lines.push(CheckLine::of(
                "chain(4) over Z/3: x1 * y is nonzero",
                xy.is_some_and(|e| e.ok && e.rendered != "0"),
                xy.map_or("entry missing".into(), |e| format!("x1 * y = {}", e.rendered)),
            ));
        }
        Err(e) => lines.push(CheckLine::fail(name, e.to_string())),
    }

    SuiteReport { suite: "cup".into(), lines }
}

// ---------------------------------------------------------------------
// Suite: matching
// ---------------------------------------------------------------------

fn complexes_equal(a: &ChainComplex, b: &ChainComplex) -> Option<String> {
    if a.dims() != b.dims() {
        return Some("dimension vectors differ".into());
    }
    for k in 1..=a.top_degree() {
        if a.boundary(k) != b.boundary(k) {
            return Some(format!("boundary {k} differs"));
        }
    }
    None
}

fn normalization_line(label: &str, g: Arc<LieAlgebra>, ring: &CoefficientRing) -> CheckLine {
    let name = format!("normalization matching on {label}");
    let c = match build_ce_complex(g, ring) {
        Ok(c) => c,
        Err(e) => return CheckLine::fail(name, e.to_string()),
    };
    let m = match normalization_matching(&c) {
        Ok(m) => m,
        Err(e) => return CheckLine::fail(name, e.to_string()),
    };
    if validate_matching(&c, &m) != MatchingStatus::Valid {
        return CheckLine::fail(name, "matching fails validation");
    }
    let r = reduce_by_matching(&c, &m);
    if !r.check_d_squared() {
        return CheckLine::fail(name, "reduced boundary does not square to zero");
    }
    let homology_ok = if *ring == CoefficientRing::Integers {
        match (homology_over_Z(&c), homology_over_Z(&r)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    } else {
        match (homology_over_field(&c), homology_over_field(&r)) {
            (Ok(a), Ok(b)) => a.dims() == b.dims(),
            _ => false,
        }
    };
    CheckLine::of(
        name,
        homology_ok,
        format!("{} pairs, {} critical of {}", m.len(), r.total_dim(), c.total_dim()),
    )
}

fn star_line(
    label: &str,
    facets: &[Vec<String>],
    apex: &str,
    expected: Vec<HomologyModule>,
) -> CheckLine {
    let name = format!("star matching on the {label}");
    let ring = CoefficientRing::Integers;
    let c = match simplicial_chain_complex(facets, false, &ring) {
        Ok(c) => c,
        Err(e) => return CheckLine::fail(name, e.to_string()),
    };
    let m = match star_matching(&c, apex) {
        Ok(m) => m,
        Err(e) => return CheckLine::fail(name, e.to_string()),
    };
    if validate_matching(&c, &m) != MatchingStatus::Valid {
        return CheckLine::fail(name, "matching fails validation");
    }
    let r = reduce_by_matching(&c, &m);
    if !r.check_d_squared() {
        return CheckLine::fail(name, "reduced boundary does not square to zero");
    }
    let full = match homology_over_Z(&c) {
        Ok(t) => t,
        Err(e) => return CheckLine::fail(name, e.to_string()),
    };
    let reduced = match homology_over_Z(&r) {
        Ok(t) => t,
        Err(e) => return CheckLine::fail(name, e.to_string()),
    };
    let ok = full == reduced && reduced.modules() == Some(expected.as_slice());
    CheckLine::of(
        name,
        ok,
        format!("{} pairs, critical dims {}", m.len(), render_dims(&r.dims())),
    )
}

/// Discrete gradient soundness: validation, reduction, and homology
/// preservation for the normalization matchings, star matchings on
/// small simplicial fixtures, and a patchwork complex whose corrected
/// boundary is watched path by path.
pub fn matching_suite() -> SuiteReport {
    let mut lines = Vec::new();
    let z = CoefficientRing::Integers;
    let z2 = CoefficientRing::modular(2).expect("prime");

    for n in 1..=4 {
        lines.push(normalization_line(&format!("sol{n}"), Arc::new(LieAlgebra::sol(n)), &z));
    }
    for n in 2..=4 {
        lines.push(normalization_line(&format!("nil{n}"), Arc::new(LieAlgebra::nil(n)), &z));
    }
    for n in 1..=4 {
        lines.push(normalization_line(&format!("dgn{n}"), Arc::new(LieAlgebra::dgn(n)), &z));
    }
    for n in 2..=4 {
        lines.push(normalization_line(
            &format!("so{n} in characteristic 2"),
            Arc::new(LieAlgebra::so_char2(n)),
            &z2,
        ));
    }

    // The restriction shortcut must coincide with generic Schur
    // elimination entry by entry, over every supported ring.
    let ring_cases: Vec<(&str, CoefficientRing)> = vec![
        ("Z", CoefficientRing::Integers),
        ("Z/2", CoefficientRing::modular(2).expect("prime")),
        ("Z/3", CoefficientRing::modular(3).expect("prime")),
        ("Z/5", CoefficientRing::modular(5).expect("prime")),
        ("Q", CoefficientRing::Rationals),
    ];
    for (rlabel, ring) in &ring_cases {
        let name = format!("restriction shortcut = generic elimination over {rlabel}");
        let mut verdict: Option<String> = None;
        'outer: for n in 1..=4 {
            let mut algebras = vec![LieAlgebra::sol(n), LieAlgebra::dgn(n)];
            if n >= 2 {
                algebras.push(LieAlgebra::nil(n));
            }
            for g in algebras {
                let label = g.name().to_string();
                let c = match build_ce_complex(Arc::new(g), ring) {
                    Ok(c) => c,
                    Err(e) => {
                        verdict = Some(format!("{label}: {e}"));
                        break 'outer;
                    }
                };
                let shortcut = match normalization_reduce(&c) {
                    Ok(r) => r,
                    Err(e) => {
                        verdict = Some(format!("{label}: {e}"));
                        break 'outer;
                    }
                };
                let m = match normalization_matching(&c) {
                    Ok(m) => m,
                    Err(e) => {
                        verdict = Some(format!("{label}: {e}"));
                        break 'outer;
                    }
                };
                let generic = reduce_by_matching(&c, &m);
                if let Some(diff) = complexes_equal(&shortcut, &generic) {
                    verdict = Some(format!("{label}: {diff}"));
                    break 'outer;
                }
            }
        }
        match verdict {
            None => lines.push(CheckLine::pass(name, "sol, nil, dgn up to n = 4")),
            Some(d) => lines.push(CheckLine::fail(name, d)),
        }
    }
    {
        let name = "restriction shortcut = generic elimination for so(n), characteristic 2";
        let mut verdict: Option<String> = None;
        for n in 2..=4 {
            let c = build_ce_complex(Arc::new(LieAlgebra::so_char2(n)), &z2)
                .expect("within the size cap");
            let shortcut = normalization_reduce(&c).expect("complete complex");
            let m = normalization_matching(&c).expect("complete complex");
            let generic = reduce_by_matching(&c, &m);
            if let Some(diff) = complexes_equal(&shortcut, &generic) {
                verdict = Some(format!("so{n}: {diff}"));
                break;
            }
        }
        match verdict {
            None => lines.push(CheckLine::pass(name, "n = 2..4")),
            Some(d) => lines.push(CheckLine::fail(name, d)),
        }
    }

    lines.push(star_line(
        "solid triangle",
        &facet_list(&[&["a", "b", "c"]]),
        "a",
        vec![HomologyModule::free(1), HomologyModule::zero(), HomologyModule::zero()],
    ));
    lines.push(star_line(
        "tetrahedron boundary",
        &facet_list(&[
            &["a", "b", "c"],
            &["a", "b", "d"],
            &["a", "c", "d"],
            &["b", "c", "d"],
        ]),
        "a",
        vec![HomologyModule::free(1), HomologyModule::zero(), HomologyModule::free(1)],
    ));
    lines.push(star_line(
        "four-vertex path",
        &facet_list(&[&["a", "b"], &["b", "c"], &["c", "d"]]),
        "b",
        vec![HomologyModule::free(1), HomologyModule::zero()],
    ));
    lines.push(star_line(
        "square cycle",
        &facet_list(&[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]]),
        "a",
        vec![HomologyModule::free(1), HomologyModule::free(1)],
    ));

    lines.extend(patchwork_lines());

    SuiteReport { suite: "matching".into(), lines }
}

/// A hand-picked matching on a patchwork complex — a square with a
/// whisker edge, a hollow tetrahedron, and a solid one — leaving four
/// critical cells.  Two descent paths connect the critical edge to a
/// critical vertex with opposite signs, so every corrected boundary
/// vanishes.
fn patchwork_lines() -> Vec<CheckLine> {
    let mut lines = Vec::new();
    let ring = CoefficientRing::Integers;
    let facets = facet_list(&[
        &["a", "b"],
        &["b", "c"],
        &["c", "d"],
        &["a", "d"],
        &["d", "e"],
        &["e", "f", "g"],
        &["e", "f", "h"],
        &["e", "g", "h"],
        &["f", "g", "h"],
        &["i", "j", "k", "l"],
    ]);
    let c = simplicial_chain_complex(&facets, false, &ring).expect("fixture builds");

    let pair_names: &[(&[&str], &[&str])] = &[
        (&["a", "d"], &["a"]),
        (&["b", "c"], &["b"]),
        (&["c", "d"], &["c"]),
        (&["d", "e"], &["e"]),
        (&["e", "f"], &["f"]),
        (&["e", "g"], &["g"]),
        (&["e", "h"], &["h"]),
        (&["i", "j"], &["j"]),
        (&["i", "k"], &["k"]),
        (&["i", "l"], &["l"]),
        (&["e", "f", "g"], &["f", "g"]),
        (&["e", "f", "h"], &["f", "h"]),
        (&["e", "g", "h"], &["g", "h"]),
        (&["i", "j", "k"], &["j", "k"]),
        (&["i", "j", "l"], &["j", "l"]),
        (&["i", "k", "l"], &["k", "l"]),
        (&["i", "j", "k", "l"], &["j", "k", "l"]),
    ];
    let pairs: Vec<MatchedPair> = pair_names
        .iter()
        .map(|(upper, lower)| {
            let (du, iu) = simplex_id(&c, upper);
            let (dl, il) = simplex_id(&c, lower);
            assert_eq!(du, dl + 1, "pair must straddle adjacent degrees");
            MatchedPair { degree: du, upper: iu, lower: il }
        })
        .collect();
    let m = Matching::from_pairs(pairs);

    lines.push(CheckLine::of(
        "patchwork complex: matching is valid",
        validate_matching(&c, &m) == MatchingStatus::Valid,
        format!("{} pairs on dims {}", m.len(), render_dims(&c.dims())),
    ));

    let crit = critical_vertices(&c, &m);
    let expected_crit: Vec<(usize, u32)> = [
        simplex_id(&c, &["d"]),
        simplex_id(&c, &["i"]),
        simplex_id(&c, &["a", "b"]),
        simplex_id(&c, &["f", "g", "h"]),
    ]
    .to_vec();
    let crit_ok = crit.counts() == vec![2, 1, 1, 0]
        && expected_crit.iter().all(|&(k, id)| crit.per_degree[k].contains(&id));
    lines.push(CheckLine::of(
        "patchwork complex: critical cells are d, i, ab, fgh",
        crit_ok,
        format!("critical counts {}", render_dims(&crit.counts())),
    ));

    let r = reduce_by_matching(&c, &m);
    let boundaries_vanish = (1..=r.top_degree()).all(|k| r.boundary(k).is_zero());
    let reduced_h = homology_over_Z(&r).expect("integral").modules().expect("integral").to_vec();
    let expected_h = vec![
        HomologyModule::free(2),
        HomologyModule::free(1),
        HomologyModule::free(1),
        HomologyModule::zero(),
    ];
    lines.push(CheckLine::of(
        "patchwork complex: corrected boundaries vanish, homology is Z^2, Z, Z, 0",
        boundaries_vanish && reduced_h == expected_h,
        format!(
            "H = [{}]",
            reduced_h.iter().map(HomologyModule::render).collect::<Vec<_>>().join(", ")
        ),
    ));

    let (_, ab) = simplex_id(&c, &["a", "b"]);
    let (_, d) = simplex_id(&c, &["d"]);
    let mut contributions = gradient_path_contributions(&c, &m, 1, ab, d);
    contributions.sort();
    let cancel_ok = contributions == vec![crate::matrix::int(-1), crate::matrix::int(1)];
    lines.push(CheckLine::of(
        "patchwork complex: the two descent paths from ab to d cancel",
        cancel_ok,
        format!(
            "contributions [{}]",
            contributions.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
        ),
    ));

    let flow_ok = (1..=c.top_degree()).all(|k| gradient_flow_boundary(&c, &m, k) == *r.boundary(k));
    lines.push(CheckLine::of(
        "patchwork complex: path flow agrees with elimination",
        flow_ok,
        "degrees 1..3",
    ));

    lines
}

// ---------------------------------------------------------------------
// Suite: conjecture-probe
// ---------------------------------------------------------------------

/// Reports where torsion of order `m` first shows up in the tabulated
/// triangular columns, next to the conjectured location (column m + 1,
/// row 2m - 1).  Purely observational: these lines never fail.
pub fn conjecture_probe_suite(ms: &[u64]) -> SuiteReport {
    let mut lines = Vec::new();
    for &m in ms {
        let name = format!("first occurrence of Z{m} torsion");
        let conj_col = m + 1;
        let conj_row = 2 * m - 1;
        let detail = match reference::first_torsion_occurrence(m) {
            Some((n, k)) if n as u64 == conj_col && k as u64 == conj_row => format!(
                "column n = {n}, row k = {k}; matches the conjectured (m + 1, 2m - 1)"
            ),
            Some((n, k)) => format!(
                "column n = {n}, row k = {k}; conjectured column {conj_col}, row {conj_row}"
            ),
            None => format!(
                "not present in the tabulated columns n <= 6; conjectured column {conj_col}, row {conj_row}"
            ),
        };
        lines.push(CheckLine::pass(name, detail));
    }
    SuiteReport { suite: "conjecture-probe".into(), lines }
}
