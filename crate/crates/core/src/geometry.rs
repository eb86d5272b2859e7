//! Cross-section data model: round conductors, the surrounding medium and
//! the harmonic layout that maps `(conductor, harmonic)` pairs onto global
//! coefficient indices.

use std::f64::consts::PI;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

/// Vacuum permeability [H/m].
pub const MU0: f64 = 4.0e-7 * PI;
/// Vacuum permittivity [F/m].
pub const EPS0: f64 = 8.854_187_812_8e-12;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("conductor index {index} out of range (P = {count})")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("center distance requires two distinct conductors, got index {0} twice")]
    SameConductor(usize),
    #[error("no conductor with id {0}")]
    UnknownId(i64),
    #[error("layout has {layout} conductors but the cross-section has {section}")]
    LayoutMismatch { layout: usize, section: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported length unit {0:?} (expected \"mm\" or \"m\")")]
    Unit(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Phase,
    Screen,
    Armor,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Connection {
    Kept,
    Grounded,
}

/// One solid round conductor parallel to the z axis. All lengths in meters.
#[derive(Debug, Clone, PartialEq)]
pub struct Conductor {
    pub id: i64,
    pub center_x: f64,
    pub center_y: f64,
    pub radius: f64,
    /// [S/m]
    pub conductivity: f64,
    pub rel_permeability: f64,
    pub rel_permittivity: f64,
    /// Permits `rel_permittivity == 0`, i.e. displacement current ignored.
    pub zero_permittivity_ok: bool,
    pub role: Role,
    pub connection: Connection,
}

impl Conductor {
    /// Copper-like conductor with `μr = 1`, `εr = 1`, phase role, kept.
    pub fn new(id: i64, center_x: f64, center_y: f64, radius: f64, conductivity: f64) -> Self {
        Self {
            id,
            center_x,
            center_y,
            radius,
            conductivity,
            rel_permeability: 1.0,
            rel_permittivity: 1.0,
            zero_permittivity_ok: false,
            role: Role::Phase,
            connection: Connection::Kept,
        }
    }

    pub fn with_permeability(mut self, mu_r: f64) -> Self {
        self.rel_permeability = mu_r;
        self
    }

    pub fn with_role(mut self, role: Role, connection: Connection) -> Self {
        self.role = role;
        self.connection = connection;
        self
    }

    pub fn permeability(&self) -> f64 {
        self.rel_permeability * MU0
    }

    pub fn permittivity(&self) -> f64 {
        self.rel_permittivity * EPS0
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }

    /// True if `(x, y)` lies inside or on the conductor boundary.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        let dx = x - self.center_x;
        let dy = y - self.center_y;
        dx.hypot(dy) <= self.radius
    }
}

/// Ordered conductor list plus the lossless outer medium (permeability μ0).
#[derive(Debug, Clone, PartialEq)]
pub struct CrossSection {
    pub conductors: Vec<Conductor>,
    /// [F/m]
    pub outer_permittivity: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Empty,
    RadiusPositive,
    ConductivityNonNegative,
    PermeabilityPositive,
    Permittivity,
    NonFinite,
    DuplicateId,
    Overlap,
    OuterPermittivity,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::Empty => "P >= 1",
            Rule::RadiusPositive => "radius > 0",
            Rule::ConductivityNonNegative => "conductivity >= 0",
            Rule::PermeabilityPositive => "rel_permeability > 0",
            Rule::Permittivity => "rel_permittivity >= 1 (or 0 when flagged)",
            Rule::NonFinite => "finite parameters",
            Rule::DuplicateId => "unique ids",
            Rule::Overlap => "non-overlap",
            Rule::OuterPermittivity => "outer permittivity > 0",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub ids: Vec<i64>,
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.ids.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}] {}: {}", ids.join(","), self.rule, self.detail)
    }
}

impl CrossSection {
    pub fn new(conductors: Vec<Conductor>) -> Self {
        Self {
            conductors,
            outer_permittivity: EPS0,
        }
    }

    pub fn len(&self) -> usize {
        self.conductors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conductors.is_empty()
    }

    pub fn index_of(&self, id: i64) -> Result<usize, GeometryError> {
        self.conductors
            .iter()
            .position(|c| c.id == id)
            .ok_or(GeometryError::UnknownId(id))
    }

    /// Checks every type invariant with zero gap tolerance.
    pub fn validate(&self) -> Vec<Violation> {
        self.validate_with_gap(0.0)
    }

    /// Checks every type invariant; conductor pairs must satisfy
    /// `d ≥ a_p + a_q + gap_tol`. Exact tangency at `gap_tol = 0` is logged.
    pub fn validate_with_gap(&self, gap_tol: f64) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.conductors.is_empty() {
            out.push(Violation {
                ids: vec![],
                rule: Rule::Empty,
                detail: "cross-section has no conductors".into(),
            });
        }
        if !(self.outer_permittivity.is_finite() && self.outer_permittivity > 0.0) {
            out.push(Violation {
                ids: vec![],
                rule: Rule::OuterPermittivity,
                detail: format!("outer permittivity {}", self.outer_permittivity),
            });
        }
        for c in &self.conductors {
            let one = |rule: Rule, detail: String| Violation {
                ids: vec![c.id],
                rule,
                detail,
            };
            let fields = [
                c.center_x,
                c.center_y,
                c.radius,
                c.conductivity,
                c.rel_permeability,
                c.rel_permittivity,
            ];
            if fields.iter().any(|v| !v.is_finite()) {
                out.push(one(Rule::NonFinite, "non-finite parameter".into()));
                continue;
            }
            if c.radius <= 0.0 {
                out.push(one(Rule::RadiusPositive, format!("radius = {}", c.radius)));
            }
            if c.conductivity < 0.0 {
                out.push(one(
                    Rule::ConductivityNonNegative,
                    format!("conductivity = {}", c.conductivity),
                ));
            }
            if c.rel_permeability <= 0.0 {
                out.push(one(
                    Rule::PermeabilityPositive,
                    format!("mu_r = {}", c.rel_permeability),
                ));
            }
            let eps_ok = c.rel_permittivity >= 1.0
                || (c.rel_permittivity == 0.0 && c.zero_permittivity_ok);
            if !eps_ok {
                out.push(one(
                    Rule::Permittivity,
                    format!("eps_r = {}", c.rel_permittivity),
                ));
            }
        }
        let mut ids: Vec<i64> = self.conductors.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        for w in ids.windows(2) {
            if w[0] == w[1] && !out.iter().any(|v| v.rule == Rule::DuplicateId && v.ids[0] == w[0]) {
                out.push(Violation {
                    ids: vec![w[0]],
                    rule: Rule::DuplicateId,
                    detail: format!("id {} appears more than once", w[0]),
                });
            }
        }
        for (p, cp) in self.conductors.iter().enumerate() {
            for cq in &self.conductors[p + 1..] {
                let d = (cp.center_x - cq.center_x).hypot(cp.center_y - cq.center_y);
                let need = cp.radius + cq.radius + gap_tol;
                if d < need {
                    out.push(Violation {
                        ids: vec![cp.id, cq.id],
                        rule: Rule::Overlap,
                        detail: format!("center distance {d:e} m < {need:e} m"),
                    });
                } else if gap_tol == 0.0 && d == need {
                    log::warn!("conductors {} and {} are tangent", cp.id, cq.id);
                }
            }
        }
        out
    }

    /// Euclidean distance between the centers of conductors `p` and `q`.
    pub fn center_distance(&self, p: usize, q: usize) -> Result<f64, GeometryError> {
        let count = self.conductors.len();
        for index in [p, q] {
            if index >= count {
                return Err(GeometryError::IndexOutOfRange { index, count });
            }
        }
        if p == q {
            return Err(GeometryError::SameConductor(p));
        }
        let (a, b) = (&self.conductors[p], &self.conductors[q]);
        Ok((a.center_x - b.center_x).hypot(a.center_y - b.center_y))
    }

    /// Stable content hash over every parameter that enters the impedance.
    pub fn geometry_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.outer_permittivity.to_le_bytes());
        for c in &self.conductors {
            for v in [
                c.center_x,
                c.center_y,
                c.radius,
                c.conductivity,
                c.rel_permeability,
                c.rel_permittivity,
            ] {
                h.update(v.to_le_bytes());
            }
        }
        hex::encode(h.finalize())
    }

    /// Applies a rigid motion: rotation by `angle` about the origin, then translation.
    pub fn transformed(&self, angle: f64, dx: f64, dy: f64) -> Self {
        let (s, c) = angle.sin_cos();
        let mut out = self.clone();
        for k in &mut out.conductors {
            let (x, y) = (k.center_x, k.center_y);
            k.center_x = c * x - s * y + dx;
            k.center_y = s * x + c * y + dy;
        }
        out
    }

    /// Indices of conductors with the given connection tag, in order.
    pub fn indices_with(&self, connection: Connection) -> Vec<usize> {
        self.conductors
            .iter()
            .enumerate()
            .filter(|(_, c)| c.connection == connection)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Maps `(conductor p, harmonic n)` onto contiguous global indices,
/// `n = -N_p ..= N_p` within each conductor, conductors in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HarmonicLayout {
    orders: Vec<usize>,
    offsets: Vec<usize>,
    size: usize,
}

impl HarmonicLayout {
    pub fn new(orders: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(orders.len());
        let mut size = 0;
        for &n in &orders {
            offsets.push(size);
            size += 2 * n + 1;
        }
        Self {
            orders,
            offsets,
            size,
        }
    }

    pub fn uniform(conductors: usize, order: usize) -> Self {
        Self::new(vec![order; conductors])
    }

    /// Total coefficient count `N = Σ (2 N_p + 1)`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn conductors(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self, p: usize) -> usize {
        self.orders[p]
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn offset(&self, p: usize) -> usize {
        self.offsets[p]
    }

    /// Global index of coefficient `(p, n)`.
    pub fn index(&self, p: usize, n: i64) -> usize {
        let np = self.orders[p] as i64;
        debug_assert!(n.abs() <= np, "harmonic {n} exceeds order {np}");
        self.offsets[p] + (n + np) as usize
    }

    /// Inverse of [`HarmonicLayout::index`].
    pub fn locate(&self, global: usize) -> (usize, i64) {
        assert!(global < self.size, "index {global} out of range");
        let p = match self.offsets.binary_search(&global) {
            Ok(p) => p,
            Err(p) => p - 1,
        };
        (p, (global - self.offsets[p]) as i64 - self.orders[p] as i64)
    }

    pub fn check(&self, cs: &CrossSection) -> Result<(), GeometryError> {
        if self.orders.len() != cs.len() {
            return Err(GeometryError::LayoutMismatch {
                layout: self.orders.len(),
                section: cs.len(),
            });
        }
        Ok(())
    }
}

const COPPER_SIGMA: f64 = 58.0e6;

/// Three-core armored cable with 293 subconductors: 3 cores, 50 screen
/// wires per core and two staggered layers of 70 armor wires.
///
/// Three touching cables (outer radius 17 mm) sit in trefoil. Screen wires
/// lie on a 14.5 mm ring around each core; armor layers lie on 42.63 mm and
/// 39.63 mm rings, the inner layer shifted by half a pitch. Every other ring
/// places its first wire on the local +x direction.
pub fn build_paper_cable() -> CrossSection {
    armored_cable(50, 2)
}

/// Same cable with `screen_wires` per core and `armor_layers` layers of 70
/// armor wires. `armored_cable(32, 1)` is the 169-conductor variant.
pub fn armored_cable(screen_wires: usize, armor_layers: usize) -> CrossSection {
    const MM: f64 = 1e-3;
    let core_radius = 10.0 * MM;
    let insulation = 4.0 * MM;
    let screen_wire_radius = 0.5 * MM;
    let jacket = 2.0 * MM;
    let cable_radius = core_radius + insulation + 2.0 * screen_wire_radius + jacket;
    let screen_ring = core_radius + insulation + screen_wire_radius;
    let trefoil_ring = 2.0 * cable_radius / 3f64.sqrt();
    let armor_wire_radius = 1.5 * MM;
    let armor_ring = 88.26 * MM / 2.0 - armor_wire_radius;
    let armor_wires = 70;

    let mut conductors = Vec::with_capacity(3 + 3 * screen_wires + armor_layers * armor_wires);
    let mut next_id = 1;
    let cable_centers: Vec<(f64, f64)> = (0..3)
        .map(|k| {
            let phi = PI / 2.0 + 2.0 * PI * k as f64 / 3.0;
            (trefoil_ring * phi.cos(), trefoil_ring * phi.sin())
        })
        .collect();
    for &(x, y) in &cable_centers {
        conductors.push(
            Conductor::new(next_id, x, y, core_radius, COPPER_SIGMA)
                .with_role(Role::Phase, Connection::Kept),
        );
        next_id += 1;
    }
    for &(cx, cy) in &cable_centers {
        for w in 0..screen_wires {
            let phi = 2.0 * PI * w as f64 / screen_wires as f64;
            conductors.push(
                Conductor::new(
                    next_id,
                    cx + screen_ring * phi.cos(),
                    cy + screen_ring * phi.sin(),
                    screen_wire_radius,
                    COPPER_SIGMA,
                )
                .with_role(Role::Screen, Connection::Grounded),
            );
            next_id += 1;
        }
    }
    for layer in 0..armor_layers {
        let ring = armor_ring - 2.0 * armor_wire_radius * layer as f64;
        let shift = 0.5 * layer as f64;
        for w in 0..armor_wires {
            let phi = 2.0 * PI * (w as f64 + shift) / armor_wires as f64;
            conductors.push(
                Conductor::new(
                    next_id,
                    ring * phi.cos(),
                    ring * phi.sin(),
                    armor_wire_radius,
                    1.0e7,
                )
                .with_permeability(100.0)
                .with_role(Role::Armor, Connection::Grounded),
            );
            next_id += 1;
        }
    }
    CrossSection::new(conductors)
}

/// Two identical copper wires of radius `radius` on the x axis, `separation` apart.
pub fn two_wire(radius: f64, separation: f64) -> CrossSection {
    CrossSection::new(vec![
        Conductor::new(1, -separation / 2.0, 0.0, radius, COPPER_SIGMA),
        Conductor::new(2, separation / 2.0, 0.0, radius, COPPER_SIGMA),
    ])
}

// ---- JSON file format ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthUnit {
    Mm,
    M,
}

impl LengthUnit {
    fn scale(self) -> f64 {
        match self {
            LengthUnit::Mm => 1e-3,
            LengthUnit::M => 1.0,
        }
    }
}

fn default_one() -> f64 {
    1.0
}

fn default_role() -> Role {
    Role::Other
}

fn default_connection() -> Connection {
    Connection::Kept
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConductorRecord {
    pub id: i64,
    pub x: f64,
    pub y: f64,
    pub radius: f64,
    pub sigma: f64,
    #[serde(default = "default_one")]
    pub mu_r: f64,
    #[serde(default = "default_one")]
    pub eps_r: f64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub zero_eps_ok: bool,
    #[serde(default = "default_role")]
    pub role: Role,
    #[serde(default = "default_connection")]
    pub connection: Connection,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossSectionFile {
    pub units: String,
    #[serde(default = "default_one")]
    pub outer_rel_permittivity: f64,
    pub conductors: Vec<ConductorRecord>,
}

impl CrossSectionFile {
    pub fn from_cross_section(cs: &CrossSection, unit: LengthUnit) -> Self {
        let s = unit.scale();
        Self {
            units: match unit {
                LengthUnit::Mm => "mm".into(),
                LengthUnit::M => "m".into(),
            },
            outer_rel_permittivity: cs.outer_permittivity / EPS0,
            conductors: cs
                .conductors
                .iter()
                .map(|c| ConductorRecord {
                    id: c.id,
                    x: c.center_x / s,
                    y: c.center_y / s,
                    radius: c.radius / s,
                    sigma: c.conductivity,
                    mu_r: c.rel_permeability,
                    eps_r: c.rel_permittivity,
                    zero_eps_ok: c.zero_permittivity_ok,
                    role: c.role,
                    connection: c.connection,
                })
                .collect(),
        }
    }

    pub fn into_cross_section(self) -> Result<CrossSection, GeometryError> {
        let unit = match self.units.as_str() {
            "mm" => LengthUnit::Mm,
            "m" => LengthUnit::M,
            other => return Err(GeometryError::Unit(other.to_string())),
        };
        let s = unit.scale();
        let conductors = self
            .conductors
            .into_iter()
            .map(|r| Conductor {
                id: r.id,
                center_x: r.x * s,
                center_y: r.y * s,
                radius: r.radius * s,
                conductivity: r.sigma,
                rel_permeability: r.mu_r,
                rel_permittivity: r.eps_r,
                zero_permittivity_ok: r.zero_eps_ok,
                role: r.role,
                connection: r.connection,
            })
            .collect();
        Ok(CrossSection {
            conductors,
            outer_permittivity: self.outer_rel_permittivity * EPS0,
        })
    }
}

pub fn parse_cross_section(text: &str) -> Result<CrossSection, GeometryError> {
    let file: CrossSectionFile = serde_json::from_str(text).map_err(|e| GeometryError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.into_cross_section()
}

pub fn read_cross_section(path: &Path) -> Result<CrossSection, GeometryError> {
    parse_cross_section(&std::fs::read_to_string(path)?)
}

pub fn write_cross_section(
    path: &Path,
    cs: &CrossSection,
    unit: LengthUnit,
) -> Result<(), GeometryError> {
    let file = CrossSectionFile::from_cross_section(cs, unit);
    let text = serde_json::to_string_pretty(&file).expect("serializable");
    std::fs::write(path, text + "\n")?;
    Ok(())
}
