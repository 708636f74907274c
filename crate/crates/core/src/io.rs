//! JSON file formats. Every file has a top-level `kind`; polynomials are written as
//! canonical strings, elements and vector fields as arrays of them, and matrices row by row.
//! Sparse tables list only nonzero entries, in index order.

use serde::{Deserialize, Serialize};

use crate::coeffring::{
    parse_rational, DerivationPair, Element, FreeModule, LinearMap, Poly, Rational, Ring, RingRef, VectorField,
};
use crate::cohomology::{Cochain, ComplexKind, LieRepresentation, RepRef, Representation};
use crate::crossed::{CrossedExtensionData, CrossedModuleData};
use crate::error::{Error, Result};
use crate::extensions::ExtensionData;
use crate::rmatrix::RMatrix;
use crate::structures::{ActionData, LieAlgebraFD, LieRinehart, PreLieRinehart};
use crate::twoalg::{Lie2Data, PreLie2Data};

pub type Strings = Vec<String>;
pub type Matrix = Vec<Vec<String>>;
/// `[i, j, value]`.
pub type Entry = (usize, usize, Strings);

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PrelieJson {
    pub ring: Ring,
    pub basis: Vec<String>,
    pub product: Vec<Entry>,
    pub anchor: Vec<Strings>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct LieJson {
    pub ring: Ring,
    pub basis: Vec<String>,
    pub bracket: Vec<Entry>,
    pub anchor: Vec<Strings>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraJson {
    PrelieRinehart(PrelieJson),
    LieRinehart(LieJson),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RhoJson {
    pub linear: Matrix,
    pub symbol: Strings,
}

/// `mu` is present exactly for representations of pre-Lie-Rinehart algebras.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RepJson {
    pub algebra: AlgebraJson,
    pub target: Vec<String>,
    pub rho: Vec<RhoJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<Matrix>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CochainJson {
    pub complex: ComplexKind,
    pub degree: usize,
    pub ring: Ring,
    pub rank: usize,
    pub target_rank: usize,
    pub values: Vec<(Vec<usize>, Strings)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ExtensionJson {
    pub representation: RepJson,
    pub kernel: PrelieJson,
    pub omega: CochainJson,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CrossedModuleJson {
    pub base: PrelieJson,
    pub top: PrelieJson,
    pub boundary: Matrix,
    pub rho: Vec<RhoJson>,
    pub mu: Vec<Matrix>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CrossedExtensionJson {
    pub crossed_module: CrossedModuleJson,
    pub quotient: PrelieJson,
    pub kernel: Vec<String>,
    pub iota: Matrix,
    pub p: Matrix,
    pub s: Matrix,
    pub image: Vec<usize>,
    pub sigma: Matrix,
}

/// `m2_01[i]` is `m₂(eᵢ, -)` on `P₁` and `m2_10[i]` is `m₂(-, eᵢ)`; the latter is absent for
/// Lie 2-algebras, where `m2_00` and `m3` hold `l₂` and `l₃`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TwoAlgebraJson {
    pub complex: ComplexKind,
    pub ring: Ring,
    pub p0: Vec<String>,
    pub p1: Vec<String>,
    pub m1: Matrix,
    pub m2_00: Vec<Entry>,
    pub m2_01: Vec<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m2_10: Option<Vec<Matrix>>,
    pub anchor: Vec<Strings>,
    pub m3: Vec<(Vec<usize>, Strings)>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct LieFdJson {
    pub dim: usize,
    pub bracket: Vec<Entry>,
}

/// `r` lists the coefficients `r_ij`, `i < j`, of `r = Σ r_ij eᵢ∧eⱼ` in lexicographic order.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RmatrixJson {
    pub lie: LieFdJson,
    pub ring: Ring,
    pub action: Vec<Strings>,
    pub r: Strings,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureFile {
    PrelieRinehart(PrelieJson),
    LieRinehart(LieJson),
    Representation(RepJson),
    Cochain(CochainJson),
    Extension(ExtensionJson),
    CrossedModule(CrossedModuleJson),
    CrossedExtension(CrossedExtensionJson),
    TwoAlgebra(TwoAlgebraJson),
    RmatrixInput(RmatrixJson),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyRep {
    Prelie(Representation),
    Lie(LieRepresentation),
}

impl AnyRep {
    pub fn as_ref(&self) -> RepRef<'_> {
        match self {
            AnyRep::Prelie(r) => RepRef::Prelie(r),
            AnyRep::Lie(r) => RepRef::Lie(r),
        }
    }

    pub fn ring(&self) -> &RingRef {
        match self {
            AnyRep::Prelie(r) => r.ring(),
            AnyRep::Lie(r) => r.ring(),
        }
    }
}

/// The decoded content of a structure file.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Structure {
    PreLie(PreLieRinehart),
    Lie(LieRinehart),
    Rep(AnyRep),
    Cochain(Cochain, Option<AnyRep>),
    Extension(ExtensionData),
    CrossedModule(CrossedModuleData),
    CrossedExtension(CrossedExtensionData),
    PreLie2(PreLie2Data),
    Lie2(Lie2Data),
    RMatrix(RMatrix, ActionData<LieAlgebraFD>),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::PreLie(_) => "prelie_rinehart",
            Structure::Lie(_) => "lie_rinehart",
            Structure::Rep(_) => "representation",
            Structure::Cochain(..) => "cochain",
            Structure::Extension(_) => "extension",
            Structure::CrossedModule(_) => "crossed_module",
            Structure::CrossedExtension(_) => "crossed_extension",
            Structure::PreLie2(_) | Structure::Lie2(_) => "two_algebra",
            Structure::RMatrix(..) => "rmatrix_input",
        }
    }
}

/// Parses and decodes a structure file.
pub fn parse(text: &str) -> Result<Structure> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    decode(&file)
}

/// The canonical text of a structure: pretty JSON with a trailing newline.
pub fn render(s: &Structure) -> String {
    render_value(&encode(s))
}

pub fn render_value<T: Serialize>(v: &T) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("serializable");
    out.push('\n');
    out
}

pub fn decode(file: &StructureFile) -> Result<Structure> {
    Ok(match file {
        StructureFile::PrelieRinehart(j) => Structure::PreLie(j.build()?),
        StructureFile::LieRinehart(j) => Structure::Lie(j.build()?),
        StructureFile::Representation(j) => Structure::Rep(j.build()?),
        StructureFile::Cochain(j) => {
            let rep = j.representation.as_ref().map(RepJson::build).transpose()?;
            let c = j.build()?;
            if let Some(rep) = &rep {
                check_cochain_fits(&c, rep)?;
            }
            Structure::Cochain(c, rep)
        }
        StructureFile::Extension(j) => Structure::Extension(j.build()?),
        StructureFile::CrossedModule(j) => Structure::CrossedModule(j.build()?),
        StructureFile::CrossedExtension(j) => Structure::CrossedExtension(j.build()?),
        StructureFile::TwoAlgebra(j) => j.build()?,
        StructureFile::RmatrixInput(j) => {
            let (r, a) = j.build()?;
            Structure::RMatrix(r, a)
        }
    })
}

pub fn encode(s: &Structure) -> StructureFile {
    match s {
        Structure::PreLie(a) => StructureFile::PrelieRinehart(PrelieJson::from_domain(a)),
        Structure::Lie(a) => StructureFile::LieRinehart(LieJson::from_domain(a)),
        Structure::Rep(r) => StructureFile::Representation(RepJson::from_domain(r)),
        Structure::Cochain(c, rep) => StructureFile::Cochain(CochainJson::from_domain(c, rep.as_ref())),
        Structure::Extension(x) => StructureFile::Extension(ExtensionJson::from_domain(x)),
        Structure::CrossedModule(cm) => StructureFile::CrossedModule(CrossedModuleJson::from_domain(cm)),
        Structure::CrossedExtension(xd) => StructureFile::CrossedExtension(CrossedExtensionJson::from_domain(xd)),
        Structure::PreLie2(x) => StructureFile::TwoAlgebra(TwoAlgebraJson::from_prelie(x)),
        Structure::Lie2(x) => StructureFile::TwoAlgebra(TwoAlgebraJson::from_lie(x)),
        Structure::RMatrix(r, a) => StructureFile::RmatrixInput(RmatrixJson::from_domain(r, a)),
    }
}

fn check_cochain_fits(c: &Cochain, rep: &AnyRep) -> Result<()> {
    let (kind, n, m) = match rep {
        AnyRep::Prelie(r) => (ComplexKind::Prelie, r.rank(), r.target_rank()),
        AnyRep::Lie(r) => (ComplexKind::Lie, r.rank(), r.target_rank()),
    };
    same_ring(&c.ring, rep.ring())?;
    if c.kind != kind || c.rank != n || c.target_rank != m {
        return Err(Error::Malformed("the cochain does not match its representation".into()));
    }
    Ok(())
}

// ---- scalar helpers

fn ring_of(r: &Ring) -> Result<RingRef> {
    Ring::new(&r.vars, r.laurent)
}

fn same_ring(a: &RingRef, b: &RingRef) -> Result<()> {
    if a != b {
        return Err(Error::RingMismatch("nested objects use different rings".into()));
    }
    Ok(())
}

fn element(ring: &RingRef, s: &Strings, rank: usize) -> Result<Element> {
    if s.len() != rank {
        return Err(Error::Malformed(format!("expected {rank} coordinates, got {}", s.len())));
    }
    Ok(Element::from_coeffs(s.iter().map(|p| Poly::parse(ring, p)).collect::<Result<_>>()?))
}

fn vector_field(ring: &RingRef, s: &Strings) -> Result<VectorField> {
    VectorField::new(ring, s.iter().map(|p| Poly::parse(ring, p)).collect::<Result<_>>()?)
}

fn matrix(ring: &RingRef, m: &Matrix, rows: usize, cols: usize) -> Result<LinearMap> {
    let entries = m.iter().map(|r| r.iter().map(|p| Poly::parse(ring, p)).collect()).collect::<Result<_>>()?;
    LinearMap::from_rows(ring, rows, cols, entries)
}

fn table(ring: &RingRef, entries: &[Entry], n: usize, rank: usize) -> Result<Vec<Vec<Element>>> {
    let mut t = vec![vec![None; n]; n];
    for (i, j, v) in entries {
        if *i >= n || *j >= n {
            return Err(Error::Malformed(format!("table index ({i}, {j}) out of range")));
        }
        if t[*i][*j].is_some() {
            return Err(Error::Malformed(format!("table entry ({i}, {j}) given twice")));
        }
        t[*i][*j] = Some(element(ring, v, rank)?);
    }
    Ok(t.into_iter()
        .map(|row| row.into_iter().map(|e| e.unwrap_or_else(|| Element::zero(ring, rank))).collect())
        .collect())
}

fn table_entries(t: &[Vec<Element>]) -> Vec<Entry> {
    let mut out = vec![];
    for (i, row) in t.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if !e.is_zero() {
                out.push((i, j, e.to_strings()));
            }
        }
    }
    out
}

fn field_strings(v: &VectorField) -> Strings {
    v.components().iter().map(Poly::to_string).collect()
}

fn rational_strings(v: &[Rational]) -> Strings {
    v.iter().map(|q| q.to_string()).collect()
}

fn cochain_values(c: &Cochain) -> Vec<(Vec<usize>, Strings)> {
    c.values.iter().filter(|(_, v)| !v.is_zero()).map(|(t, v)| (t.clone(), v.to_strings())).collect()
}

fn cochain_from(
    kind: ComplexKind,
    degree: usize,
    ring: &RingRef,
    n: usize,
    m: usize,
    values: &[(Vec<usize>, Strings)],
) -> Result<Cochain> {
    let entries = values.iter().map(|(t, v)| Ok((t.clone(), element(ring, v, m)?))).collect::<Result<Vec<_>>>()?;
    let mut seen = std::collections::BTreeSet::new();
    if entries.iter().any(|(t, _)| !seen.insert(t.clone())) {
        return Err(Error::Malformed("a cochain value is given twice".into()));
    }
    Cochain::from_values(kind, degree, ring, n, m, entries)
}

fn rho_json(r: &DerivationPair) -> RhoJson {
    RhoJson { linear: r.linear.to_strings(), symbol: field_strings(&r.symbol) }
}

fn rho_from(ring: &RingRef, r: &RhoJson, m: usize) -> Result<DerivationPair> {
    DerivationPair::new(matrix(ring, &r.linear, m, m)?, vector_field(ring, &r.symbol)?)
}

// ---- structures

impl PrelieJson {
    pub fn from_domain(a: &PreLieRinehart) -> Self {
        PrelieJson {
            ring: (**a.ring()).clone(),
            basis: a.module.basis.clone(),
            product: table_entries(&a.product),
            anchor: a.anchor.iter().map(field_strings).collect(),
        }
    }

    pub fn build(&self) -> Result<PreLieRinehart> {
        let ring = ring_of(&self.ring)?;
        let n = self.basis.len();
        let module = FreeModule::new(&ring, self.basis.clone())?;
        let anchor = self.anchor.iter().map(|v| vector_field(&ring, v)).collect::<Result<_>>()?;
        PreLieRinehart::new(module, table(&ring, &self.product, n, n)?, anchor)
    }
}

impl LieJson {
    pub fn from_domain(a: &LieRinehart) -> Self {
        LieJson {
            ring: (**a.ring()).clone(),
            basis: a.module.basis.clone(),
            bracket: table_entries(&a.bracket),
            anchor: a.anchor.iter().map(field_strings).collect(),
        }
    }

    pub fn build(&self) -> Result<LieRinehart> {
        let ring = ring_of(&self.ring)?;
        let n = self.basis.len();
        let module = FreeModule::new(&ring, self.basis.clone())?;
        let anchor = self.anchor.iter().map(|v| vector_field(&ring, v)).collect::<Result<_>>()?;
        LieRinehart::new(module, table(&ring, &self.bracket, n, n)?, anchor)
    }
}

impl RepJson {
    pub fn from_domain(r: &AnyRep) -> Self {
        match r {
            AnyRep::Prelie(r) => RepJson {
                algebra: AlgebraJson::PrelieRinehart(PrelieJson::from_domain(&r.algebra)),
                target: r.target.basis.clone(),
                rho: r.rho.iter().map(rho_json).collect(),
                mu: Some(r.mu.iter().map(LinearMap::to_strings).collect()),
            },
            AnyRep::Lie(r) => RepJson {
                algebra: AlgebraJson::LieRinehart(LieJson::from_domain(&r.algebra)),
                target: r.target.basis.clone(),
                rho: r.rho.iter().map(rho_json).collect(),
                mu: None,
            },
        }
    }

    pub fn build(&self) -> Result<AnyRep> {
        let m = self.target.len();
        match (&self.algebra, &self.mu) {
            (AlgebraJson::PrelieRinehart(a), Some(mu)) => {
                let alg = a.build()?;
                let ring = alg.ring().clone();
                let target = FreeModule::new(&ring, self.target.clone())?;
                let rho = self.rho.iter().map(|r| rho_from(&ring, r, m)).collect::<Result<_>>()?;
                let mu = mu.iter().map(|x| matrix(&ring, x, m, m)).collect::<Result<_>>()?;
                Ok(AnyRep::Prelie(Representation::new(alg, target, rho, mu)?))
            }
            (AlgebraJson::LieRinehart(a), None) => {
                let alg = a.build()?;
                let ring = alg.ring().clone();
                let target = FreeModule::new(&ring, self.target.clone())?;
                let rho = self.rho.iter().map(|r| rho_from(&ring, r, m)).collect::<Result<_>>()?;
                Ok(AnyRep::Lie(LieRepresentation::new(alg, target, rho)?))
            }
            (AlgebraJson::PrelieRinehart(_), None) => Err(Error::Malformed("a pre-Lie representation needs mu".into())),
            (AlgebraJson::LieRinehart(_), Some(_)) => Err(Error::Malformed("a Lie representation has no mu".into())),
        }
    }

    fn build_prelie(&self) -> Result<Representation> {
        match self.build()? {
            AnyRep::Prelie(r) => Ok(r),
            AnyRep::Lie(_) => Err(Error::Malformed("expected a representation of a pre-Lie-Rinehart algebra".into())),
        }
    }
}

impl CochainJson {
    pub fn from_domain(c: &Cochain, rep: Option<&AnyRep>) -> Self {
        CochainJson {
            complex: c.kind,
            degree: c.degree,
            ring: (*c.ring).clone(),
            rank: c.rank,
            target_rank: c.target_rank,
            values: cochain_values(c),
            representation: rep.map(RepJson::from_domain),
        }
    }

    pub fn build(&self) -> Result<Cochain> {
        let ring = ring_of(&self.ring)?;
        cochain_from(self.complex, self.degree, &ring, self.rank, self.target_rank, &self.values)
    }
}

impl ExtensionJson {
    pub fn from_domain(x: &ExtensionData) -> Self {
        ExtensionJson {
            representation: RepJson::from_domain(&AnyRep::Prelie(x.rep.clone())),
            kernel: PrelieJson::from_domain(&x.kernel),
            omega: CochainJson::from_domain(&x.omega, None),
        }
    }

    pub fn build(&self) -> Result<ExtensionData> {
        let rep = self.representation.build_prelie()?;
        let kernel = self.kernel.build()?;
        let omega = self.omega.build()?;
        same_ring(rep.ring(), kernel.ring())?;
        same_ring(rep.ring(), &omega.ring)?;
        ExtensionData::new(kernel, rep, omega)
    }
}

impl CrossedModuleJson {
    pub fn from_domain(cm: &CrossedModuleData) -> Self {
        CrossedModuleJson {
            base: PrelieJson::from_domain(&cm.base),
            top: PrelieJson::from_domain(&cm.top),
            boundary: cm.boundary.to_strings(),
            rho: cm.rep.rho.iter().map(rho_json).collect(),
            mu: cm.rep.mu.iter().map(LinearMap::to_strings).collect(),
        }
    }

    pub fn build(&self) -> Result<CrossedModuleData> {
        let base = self.base.build()?;
        let top = self.top.build()?;
        let ring = base.ring().clone();
        same_ring(&ring, top.ring())?;
        let m = top.rank();
        let boundary = matrix(&ring, &self.boundary, base.rank(), m)?;
        let rho = self.rho.iter().map(|r| rho_from(&ring, r, m)).collect::<Result<_>>()?;
        let mu = self.mu.iter().map(|x| matrix(&ring, x, m, m)).collect::<Result<_>>()?;
        let rep = Representation::new(base.clone(), top.module.clone(), rho, mu)?;
        CrossedModuleData::new(base, top, boundary, rep)
    }
}

impl CrossedExtensionJson {
    pub fn from_domain(xd: &CrossedExtensionData) -> Self {
        CrossedExtensionJson {
            crossed_module: CrossedModuleJson::from_domain(&xd.cm),
            quotient: PrelieJson::from_domain(&xd.quotient),
            kernel: xd.kernel_module.basis.clone(),
            iota: xd.iota.to_strings(),
            p: xd.p.to_strings(),
            s: xd.s.to_strings(),
            image: xd.image.clone(),
            sigma: xd.sigma.to_strings(),
        }
    }

    pub fn build(&self) -> Result<CrossedExtensionData> {
        let cm = self.crossed_module.build()?;
        let quotient = self.quotient.build()?;
        let ring = cm.base.ring().clone();
        same_ring(&ring, quotient.ring())?;
        let kernel_module = FreeModule::new(&ring, self.kernel.clone())?;
        let (n, m, q, k) = (cm.base.rank(), cm.top.rank(), quotient.rank(), kernel_module.rank());
        if self.image.iter().any(|&i| i >= n) {
            return Err(Error::Malformed("image coordinate out of range".into()));
        }
        Ok(CrossedExtensionData {
            iota: matrix(&ring, &self.iota, m, k)?,
            p: matrix(&ring, &self.p, q, n)?,
            s: matrix(&ring, &self.s, n, q)?,
            sigma: matrix(&ring, &self.sigma, m, self.image.len())?,
            image: self.image.clone(),
            cm,
            quotient,
            kernel_module,
        })
    }
}

impl TwoAlgebraJson {
    pub fn from_prelie(x: &PreLie2Data) -> Self {
        let base = x.base();
        TwoAlgebraJson {
            complex: ComplexKind::Prelie,
            ring: (**x.ring()).clone(),
            p0: base.module.basis.clone(),
            p1: x.rep.target.basis.clone(),
            m1: x.m1.to_strings(),
            m2_00: table_entries(&base.product),
            m2_01: x.rep.rho.iter().map(|r| r.linear.to_strings()).collect(),
            m2_10: Some(x.rep.mu.iter().map(LinearMap::to_strings).collect()),
            anchor: base.anchor.iter().map(field_strings).collect(),
            m3: cochain_values(&x.m3),
        }
    }

    pub fn from_lie(x: &Lie2Data) -> Self {
        let base = x.base();
        TwoAlgebraJson {
            complex: ComplexKind::Lie,
            ring: (**x.ring()).clone(),
            p0: base.module.basis.clone(),
            p1: x.rep.target.basis.clone(),
            m1: x.l1.to_strings(),
            m2_00: table_entries(&base.bracket),
            m2_01: x.rep.rho.iter().map(|r| r.linear.to_strings()).collect(),
            m2_10: None,
            anchor: base.anchor.iter().map(field_strings).collect(),
            m3: cochain_values(&x.l3),
        }
    }

    /// The mixed products are derivation pairs whose symbol is the anchor.
    pub fn build(&self) -> Result<Structure> {
        let ring = ring_of(&self.ring)?;
        let (n, m) = (self.p0.len(), self.p1.len());
        let p0 = FreeModule::new(&ring, self.p0.clone())?;
        let p1 = FreeModule::new(&ring, self.p1.clone())?;
        let anchor: Vec<VectorField> = self.anchor.iter().map(|v| vector_field(&ring, v)).collect::<Result<_>>()?;
        if self.m2_01.len() != n || anchor.len() != n {
            return Err(Error::Malformed(format!("m2_01 and anchor need {n} entries")));
        }
        let rho = self
            .m2_01
            .iter()
            .zip(&anchor)
            .map(|(x, a)| DerivationPair::new(matrix(&ring, x, m, m)?, a.clone()))
            .collect::<Result<Vec<_>>>()?;
        let m1 = matrix(&ring, &self.m1, n, m)?;
        let m3 = cochain_from(self.complex, 3, &ring, n, m, &self.m3)?;
        let m2 = table(&ring, &self.m2_00, n, n)?;
        match (self.complex, &self.m2_10) {
            (ComplexKind::Prelie, Some(m2_10)) => {
                let alg = PreLieRinehart::new(p0, m2, anchor)?;
                let mu = m2_10.iter().map(|x| matrix(&ring, x, m, m)).collect::<Result<_>>()?;
                let rep = Representation::new(alg, p1, rho, mu)?;
                Ok(Structure::PreLie2(PreLie2Data::new(rep, m1, m3)?))
            }
            (ComplexKind::Lie, None) => {
                let alg = LieRinehart::new(p0, m2, anchor)?;
                let rep = LieRepresentation::new(alg, p1, rho)?;
                Ok(Structure::Lie2(Lie2Data::new(rep, m1, m3)?))
            }
            (ComplexKind::Prelie, None) => Err(Error::Malformed("a pre-Lie 2-algebra needs m2_10".into())),
            (ComplexKind::Lie, Some(_)) => Err(Error::Malformed("a Lie 2-algebra has no m2_10".into())),
        }
    }
}

impl RmatrixJson {
    pub fn from_domain(r: &RMatrix, a: &ActionData<LieAlgebraFD>) -> Self {
        let g = &r.algebra;
        let mut bracket = vec![];
        for i in 0..g.dim {
            for j in 0..g.dim {
                if g.bracket[i][j].iter().any(|q| !num_traits::Zero::is_zero(q)) {
                    bracket.push((i, j, rational_strings(&g.bracket[i][j])));
                }
            }
        }
        let upper =
            (0..g.dim).flat_map(|i| (i + 1..g.dim).map(move |j| (i, j))).map(|(i, j)| r.coeffs[i][j].to_string());
        RmatrixJson {
            lie: LieFdJson { dim: g.dim, bracket },
            ring: (**a.ring()).clone(),
            action: a.images.iter().map(field_strings).collect(),
            r: upper.collect(),
        }
    }

    pub fn build(&self) -> Result<(RMatrix, ActionData<LieAlgebraFD>)> {
        let d = self.lie.dim;
        let mut t = vec![vec![vec![Rational::from_integer(0.into()); d]; d]; d];
        for (i, j, v) in &self.lie.bracket {
            if *i >= d || *j >= d || v.len() != d {
                return Err(Error::Malformed(format!("bracket entry ({i}, {j}) does not fit dimension {d}")));
            }
            t[*i][*j] = v.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
        }
        let g = LieAlgebraFD::new(d, t)?;
        let ring = ring_of(&self.ring)?;
        let images = self.action.iter().map(|v| vector_field(&ring, v)).collect::<Result<_>>()?;
        let action = ActionData::new(g.clone(), images)?;
        let upper = self.r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        Ok((RMatrix::from_upper(g, &upper)?, action))
    }
}

#[cfg(test)]
mod tests;
