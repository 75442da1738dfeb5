//! Exact, finite-n checks of the embedding `a -> e_{1,1}(a)` into the algebra
//! generated by `E_1(a_1), .., E_1(a_m), E_{-1}(1)`, and of the growth
//! comparisons along the chain `L -> U(L) -> .. -> [C, C]`, `C = M_2(B)`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, BaseAlgebra, LieAlgebra};
use crate::banded::{BandedCalculus, BandedElement, Fault};
use crate::error::{Error, Result};
use crate::span::{
    assoc_filtration, filtration_with, lie_growth, Associative, Commutator, CoordinateKey, Derived,
    Filtration, GrowthKind, GrowthTable, SpanBasis,
};

/// Outcome of one named check. A failure always names a concrete witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
}

/// Ordered list of checks plus free-form header lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub header: Vec<String>,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.header.push(line.into());
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: Status::Pass,
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: Status::Fail(witness.into()),
        });
    }

    /// Records a pass or the first witness.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.header.extend(other.header);
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> + '_ {
        self.checks.iter().filter(|c| c.status != Status::Pass)
    }
}

/// Header lines start with `# `; then one line per check:
/// `name<TAB>PASS` or `name<TAB>FAIL<TAB>witness`.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for h in &self.header {
            writeln!(f, "# {h}")?;
        }
        for c in &self.checks {
            match &c.status {
                Status::Pass => writeln!(f, "{}\tPASS", c.name)?,
                Status::Fail(w) => {
                    writeln!(f, "{}\tFAIL\t{}", c.name, w.replace(['\n', '\t'], " "))?
                }
            }
        }
        Ok(())
    }
}

/// The embedding setting: a unital base `A`, elements `a_1..a_m`,
/// `V = span(a_1, .., a_m, 1)` and `W = span(E_1(a_1), .., E_1(a_m), E_{-1}(1))`.
#[derive(Clone, Debug)]
pub struct EmbeddingScenario {
    base: BaseAlgebra,
    elements: Vec<AlgebraElement>,
    n_max: usize,
}

impl EmbeddingScenario {
    pub fn new(base: BaseAlgebra, elements: Vec<AlgebraElement>, n_max: usize) -> Result<Self> {
        base.one()?;
        if elements.is_empty() {
            return Err(Error::NoElements);
        }
        if n_max < 1 {
            return Err(Error::InvalidLength(n_max));
        }
        for a in &elements {
            base.check(a)?;
        }
        Ok(EmbeddingScenario {
            base,
            elements,
            n_max,
        })
    }

    pub fn base(&self) -> &BaseAlgebra {
        &self.base
    }

    pub fn elements(&self) -> &[AlgebraElement] {
        &self.elements
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `a_1, .., a_m, 1`.
    pub fn v_generators(&self) -> Vec<AlgebraElement> {
        let mut v = self.elements.clone();
        v.push(self.base.one().expect("unit checked at construction"));
        v
    }

    /// `E_1(a_1), .., E_1(a_m), E_{-1}(1)`.
    pub fn build_generators(&self) -> Vec<BandedElement> {
        let mut w: Vec<BandedElement> = self
            .elements
            .iter()
            .map(|a| BandedElement::band(1, a.clone()))
            .collect();
        w.push(BandedElement::band(
            -1,
            self.base.one().expect("unit checked at construction"),
        ));
        w
    }

    fn generator_name(&self, g: usize) -> String {
        if g < self.elements.len() {
            format!("E_1(a_{})", g + 1)
        } else {
            "E_-1(1)".to_string()
        }
    }

    fn derivation(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&g| self.generator_name(g))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// `a -> e_{1,1}(a)`.
pub fn phi(a: &AlgebraElement) -> BandedElement {
    BandedElement::cell(1, 1, a.clone()).expect("(1,1) is a valid cell")
}

/// Result of running every embedding check on one scenario.
#[derive(Clone, Debug)]
pub struct LemmaOutcome {
    pub report: VerificationReport,
    /// `g_A(V, n)`.
    pub base_table: GrowthTable,
    /// `g_{B'}(W, n)` with bound column `(n + 1)^2 g_A(V, n)`.
    pub banded_table: GrowthTable,
}

/// Runs the embedding checks for one scenario.
pub struct LemmaVerifier<'a> {
    scenario: &'a EmbeddingScenario,
    calc: BandedCalculus<'a>,
    base_filtration: Filtration<AlgebraElement>,
}

impl<'a> LemmaVerifier<'a> {
    pub fn new(scenario: &'a EmbeddingScenario) -> Result<Self> {
        Self::build(scenario, BandedCalculus::new(&scenario.base))
    }

    /// Verifier whose banded multiplication carries a deliberate defect.
    #[doc(hidden)]
    pub fn with_fault(scenario: &'a EmbeddingScenario, fault: Fault) -> Result<Self> {
        Self::build(scenario, BandedCalculus::with_fault(&scenario.base, fault))
    }

    fn build(scenario: &'a EmbeddingScenario, calc: BandedCalculus<'a>) -> Result<Self> {
        let base_filtration = assoc_filtration(
            &Associative(&scenario.base),
            &scenario.v_generators(),
            scenario.n_max,
        )?;
        Ok(LemmaVerifier {
            scenario,
            calc,
            base_filtration,
        })
    }

    /// `g_A(V, n)` for `n <= n_max`.
    pub fn base_table(&self) -> &GrowthTable {
        &self.base_filtration.table
    }

    fn base_basis(&self) -> Vec<&AlgebraElement> {
        self.base_filtration
            .elements()
            .map(|d| &d.element)
            .collect()
    }

    fn random_combination(
        &self,
        rng: &mut ChaCha8Rng,
        basis: &[&AlgebraElement],
    ) -> AlgebraElement {
        let mut a = AlgebraElement::zero();
        // one draw in eight is forced to zero to exercise the kernel
        if rng.gen_range(0..8) == 0 {
            return a;
        }
        // sparse: dense combinations make products in large bases needlessly slow
        for _ in 0..rng.gen_range(1..=3) {
            let b = basis[rng.gen_range(0..basis.len())];
            a.add_scaled(&self.scenario.base.scalar(rng.gen_range(-3..=3)), b);
        }
        a
    }

    /// Random-trial check that `phi` is multiplicative, linear and injective
    /// on `V^{n_max}`.
    pub fn verify_phi(&self, trials: usize, seed: u64) -> Result<VerificationReport> {
        let base = &self.scenario.base;
        let basis = self.base_basis();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut mult, mut linear, mut injective) = (None, None, None);
        for t in 1..=trials {
            let a = self.random_combination(&mut rng, &basis);
            let b = self.random_combination(&mut rng, &basis);
            let c = base.scalar(rng.gen_range(-3..=3));

            let lhs = phi(&base.mul(&a, &b)?);
            let rhs = self.calc.mul(&phi(&a), &phi(&b))?;
            if mult.is_none() && lhs != rhs {
                mult = Some(format!(
                    "trial {t}: a = {a}, b = {b}: phi(ab) = {lhs} but phi(a)phi(b) = {rhs}"
                ));
            }

            let mut comb = a.clone();
            comb.add_scaled(&c, &b);
            if linear.is_none() && phi(&comb) != phi(&a).add(&phi(&b).scale(&c)) {
                linear = Some(format!("trial {t}: a = {a}, b = {b}, c = {c}"));
            }

            if injective.is_none() {
                let image = phi(&a);
                let expected = a.terms().map(|(i, v)| {
                    (
                        CoordinateKey::Cell {
                            row: 1,
                            col: 1,
                            index: i.clone(),
                        },
                        v.clone(),
                    )
                });
                let coords_match =
                    image.coordinates() == crate::span::SparseVector::from_entries(expected);
                if image.is_zero() != a.is_zero() || !coords_match {
                    injective = Some(format!("trial {t}: a = {a}, phi(a) = {image}"));
                }
            }
        }
        let mut report = VerificationReport::new();
        report.record("phi_multiplicative", mult);
        report.record("phi_linear", linear);
        report.record("phi_injective", injective);
        Ok(report)
    }

    /// `[E_1(a), E_{-1}(1)] = e_{1,1}(a)` for every basis element `a` of
    /// `V^{n_max}`, so each `phi(a)` is a commutator in `B`.
    pub fn verify_commutator_image(&self) -> Result<VerificationReport> {
        let one = self.scenario.base.one()?;
        let lower = BandedElement::band(-1, one);
        let mut witness = None;
        for a in self.base_basis() {
            let br = self
                .calc
                .bracket(&BandedElement::band(1, a.clone()), &lower)?;
            if br != phi(a) {
                witness = Some(format!("a = {a}: [E_1(a), E_-1(1)] = {br}"));
                break;
            }
        }
        let mut report = VerificationReport::new();
        report.record("commutator_image", witness);
        Ok(report)
    }

    /// Runs the generator filtration of `W` and checks every spanning product
    /// of `W^n` against `M_{[1,n]x[1,n]}(V^n) + sum_{|i|<=n} E_i(V^n)`.
    ///
    /// Each product is checked at the step `n` where it is formed; since the
    /// right side grows with `n`, this covers every element of every `W^n`.
    fn banded_filtration(&self) -> Result<(Filtration<BandedElement>, VerificationReport)> {
        let n_max = self.scenario.n_max;
        let v_bases: Vec<SpanBasis> = (1..=n_max)
            .map(|n| {
                self.base_filtration
                    .basis_at(&Associative(&self.scenario.base), n)
            })
            .collect();
        let mut first: Vec<Option<String>> = vec![None; n_max];
        let mut checked = vec![0usize; n_max];
        let visit = |n: usize, d: &Derived<BandedElement>| {
            checked[n - 1] += 1;
            if first[n - 1].is_some() {
                return;
            }
            first[n - 1] = inclusion_violation(&d.element, n, &v_bases[n - 1]).map(|why| {
                format!(
                    "{} = {}: {why}",
                    self.scenario.derivation(&d.word),
                    d.element
                )
            });
        };
        let filtration = filtration_with(
            &Associative(&self.calc),
            &self.scenario.build_generators(),
            n_max,
            GrowthKind::Associative,
            visit,
        )?;
        let mut report = VerificationReport::new();
        for n in 1..=n_max {
            report.record(
                format!("band_inclusion n={n} ({} products)", checked[n - 1]),
                first[n - 1].take(),
            );
        }
        Ok((filtration, report))
    }

    pub fn verify_band_inclusion(&self) -> Result<VerificationReport> {
        Ok(self.banded_filtration()?.1)
    }

    /// Computes `g_{B'}(W, n)` and checks `g_{B'}(W, n) <= (n^2 + 2n + 1) g_A(V, n)`.
    pub fn verify_growth_bound(&self) -> Result<(VerificationReport, GrowthTable)> {
        let (filtration, _) = self.banded_filtration()?;
        Ok(self.bound_report(filtration.table))
    }

    fn bound_report(&self, banded: GrowthTable) -> (VerificationReport, GrowthTable) {
        let g_a = self.base_table().clone();
        let table =
            banded.with_bound(|n| (n * n + 2 * n + 1) * g_a.get(n as usize).expect("same length"));
        let mut report = VerificationReport::new();
        let bound = table.bound().expect("bound attached");
        for n in 1..=table.n_max() {
            let (d, b) = (table.dims()[n - 1], bound[n - 1]);
            report.record(
                format!("growth_bound n={n}"),
                (d > b).then(|| format!("g_B'(W,{n}) = {d} > {b} = (n^2+2n+1) g_A(V,{n})")),
            );
        }
        (report, table)
    }

    /// Every check, computing the banded filtration once.
    pub fn run_all(&self, trials: usize, seed: u64) -> Result<LemmaOutcome> {
        let mut report = VerificationReport::new();
        report.note(format!("base algebra: {}", self.scenario.base));
        report.note(format!(
            "V = span(a_1..a_{}, 1), unit added automatically; n_max = {}",
            self.scenario.elements.len(),
            self.scenario.n_max
        ));
        for (k, a) in self.scenario.elements.iter().enumerate() {
            report.note(format!("a_{} = {a}", k + 1));
        }
        report.note(format!("seed = {seed}, trials = {trials}"));
        report.extend(self.verify_phi(trials, seed)?);
        report.extend(self.verify_commutator_image()?);
        let (filtration, inclusion) = self.banded_filtration()?;
        report.extend(inclusion);
        let (bound, banded_table) = self.bound_report(filtration.table);
        report.extend(bound);
        Ok(LemmaOutcome {
            report,
            base_table: self.base_table().clone(),
            banded_table,
        })
    }
}

fn inclusion_violation(x: &BandedElement, n: usize, v_basis: &SpanBasis) -> Option<String> {
    let n_i = n as i64;
    for (k, a) in x.cells() {
        if k.row > n || k.col > n {
            return Some(format!("cell ({},{}) outside [1,{n}]^2", k.row, k.col));
        }
        if !v_basis.contains(&crate::span::base_coordinates(a)) {
            return Some(format!("cell ({},{}) value {a} not in V^{n}", k.row, k.col));
        }
    }
    for (k, a) in x.bands() {
        if k.abs() > n_i {
            return Some(format!("band offset {k} outside [-{n},{n}]"));
        }
        if !v_basis.contains(&crate::span::base_coordinates(a)) {
            return Some(format!("band {k} coefficient {a} not in V^{n}"));
        }
    }
    None
}

/// Lie growth of `[C, C]`-type generators against associative growth of the
/// same generators in `C = M_2(base)`.
#[derive(Clone, Debug)]
pub struct MatrixComparison {
    pub lie: GrowthTable,
    pub assoc: GrowthTable,
    pub generator_count: usize,
}

impl MatrixComparison {
    /// CSV with header `n,lie_dim,assoc_dim`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,lie_dim,assoc_dim\n");
        for n in 1..=self.lie.n_max() {
            s.push_str(&format!(
                "{},{},{}\n",
                n,
                self.lie.get(n).unwrap_or(0),
                self.assoc.get(n).unwrap_or(0)
            ));
        }
        s
    }
}

/// Lie generators for `C = M_2(base)`: with `X = { e_rs(v) : v in {1} ∪ base_gens }`,
/// a basis of the span of all brackets `[u, v]`, `u, v in X`.
pub fn matrix_lie_generators(
    c: &BaseAlgebra,
    base_one: &AlgebraElement,
    base_gens: &[AlgebraElement],
) -> Result<Vec<AlgebraElement>> {
    let mut vs = vec![base_one.clone()];
    vs.extend(base_gens.iter().cloned());
    let mut x = Vec::new();
    for r in 1..=2 {
        for s in 1..=2 {
            for v in &vs {
                x.push(c.matrix_unit(r, s, v)?);
            }
        }
    }
    let mut span = SpanBasis::new();
    let mut out = Vec::new();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let br = c.commutator(&x[i], &x[j])?;
            if span.insert(&crate::span::base_coordinates(&br)) {
                out.push(br);
            }
        }
    }
    Ok(out)
}

/// Checks `g_Lie(Y, n) <= g_assoc(Y, n)` in `C = M_2(base)` for the generators
/// of [`matrix_lie_generators`]. Every bracket of `n` elements of `Y` is a
/// combination of associative products of the same `n` elements, so the Lie
/// filtration sits inside the associative one.
pub fn compare_matrix_growth(
    base: &BaseAlgebra,
    base_gens: &[AlgebraElement],
    n_max: usize,
) -> Result<(MatrixComparison, VerificationReport)> {
    let one = base.one()?;
    let c = BaseAlgebra::matrix_extend(base.clone())?;
    let y = matrix_lie_generators(&c, &one, base_gens)?;
    let lie = lie_growth(&Commutator(&c), &y, n_max)?;
    let assoc = assoc_filtration(&Associative(&c), &y, n_max)?.table;
    let mut report = VerificationReport::new();
    report.note(format!(
        "C = M_2({base}); Lie generators: basis ({} elements) of the span of [u,v], u,v in {{e_rs(v): v in 1, a_i}}",
        y.len()
    ));
    for n in 1..=n_max {
        let (l, a) = (lie.get(n).unwrap_or(0), assoc.get(n).unwrap_or(0));
        report.record(
            format!("matrix_lie_le_assoc n={n}"),
            (l > a).then(|| format!("g_Lie = {l} > {a} = g_assoc")),
        );
    }
    Ok((
        MatrixComparison {
            lie,
            assoc,
            generator_count: y.len(),
        },
        report,
    ))
}

/// Options for [`pipeline_growth`].
#[derive(Clone, Copy, Debug)]
pub struct PipelineOptions {
    /// Range for the enveloping-algebra growth and the embedding scenario.
    pub n_max: usize,
    /// Range for the `M_2` comparison, which is the expensive stage.
    pub matrix_n_max: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct PipelineOutcome {
    pub report: VerificationReport,
    /// `g_{U(L)}(span(1, x_1..x_d), n)`.
    pub enveloping_table: GrowthTable,
    pub lemma: LemmaOutcome,
    pub matrix: MatrixComparison,
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1u64, |acc, i| acc * (n - k + i) / i)
}

/// Growth data along `L -> U(L) -> [A, A] -> [B, B] -> [C, C]`.
///
/// Stage one tabulates `g_{U(L)}` for `V = span(1, x_1..x_d)` and checks it
/// against the PBW count `C(n + d, d)`. Stage two runs every embedding check with
/// `A = U(L)` and `a_i = x_i`. Stage three compares Lie and associative growth
/// in `C = M_2(U(L))`.
pub fn pipeline_growth(lie: &LieAlgebra, opts: PipelineOptions) -> Result<PipelineOutcome> {
    let u = BaseAlgebra::enveloping(lie.clone());
    let gens = u
        .lie_generators()
        .expect("enveloping algebra has Lie generators");
    let mut report = VerificationReport::new();
    if lie.field().is_characteristic_two() {
        report.note("WARNING: characteristic 2; the embedding theorem assumes char F != 2");
    }
    report.note(format!(
        "L: dim {} over {}, PBW order {:?}",
        lie.dim(),
        lie.field(),
        lie.order()
    ));
    report.note(format!("seed = {}, trials = {}", opts.seed, opts.trials));

    let mut v = vec![u.one()?];
    v.extend(gens.iter().cloned());
    let enveloping_table = assoc_filtration(&Associative(&u), &v, opts.n_max)?.table;
    let d = lie.dim() as u64;
    for n in 1..=opts.n_max {
        let got = enveloping_table.get(n).unwrap_or(0);
        let pbw = binomial(n as u64 + d, d);
        report.record(
            format!("enveloping_pbw_count n={n}"),
            (got != pbw).then(|| format!("g_U = {got} != C(n+d,d) = {pbw}")),
        );
    }

    let scenario = EmbeddingScenario::new(u.clone(), gens.clone(), opts.n_max)?;
    let lemma = LemmaVerifier::new(&scenario)?.run_all(opts.trials, opts.seed)?;
    let mut lemma_report = lemma.report.clone();
    for c in &mut lemma_report.checks {
        c.name = format!("lemma_{}", c.name);
    }
    lemma_report.header.retain(|h| !h.starts_with("seed"));
    report.extend(lemma_report);

    let (matrix, matrix_report) = compare_matrix_growth(&u, &gens, opts.matrix_n_max)?;
    report.extend(matrix_report);
    Ok(PipelineOutcome {
        report,
        enveloping_table,
        lemma,
        matrix,
    })
}
