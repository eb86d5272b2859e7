//! Closed-form Galerkin projection of the 2-D logarithmic kernel onto the
//! Fourier harmonics of every conductor contour.
//!
//! Entry `(n', n)` of block `(p, q)` is the double average
//! `(1/2π) ⟨⟨ ln|r_p(θ) − r_q(θ')| e^{j(nθ' − n'θ)} ⟩⟩` over both contours.
//! It is evaluated exactly; [`crate::oracles::green_quadrature`] evaluates
//! the same average numerically.

use std::f64::consts::PI;
use std::io::{Read, Write};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};

use faer::Mat;
use num_complex::Complex64 as c64;
use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::{Conductor, CrossSection, GeometryError, HarmonicLayout};

static ASSEMBLIES: AtomicUsize = AtomicUsize::new(0);

/// Process-wide count of [`assemble_green`] calls.
pub fn assembly_count() -> usize {
    ASSEMBLIES.load(Ordering::SeqCst)
}

#[derive(Debug, Error)]
pub enum GreenError {
    #[error(transparent)]
    Layout(#[from] GeometryError),
    #[error("conductors {0} and {1} coincide")]
    Coincident(i64, i64),
    #[error("green cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Block `(p, p)`: diagonal in the harmonic index.
pub fn green_self_block(radius: f64, order: usize) -> Mat<c64> {
    let size = 2 * order + 1;
    Mat::from_fn(size, size, |i, j| {
        if i != j {
            return c64::new(0.0, 0.0);
        }
        let n = i as i64 - order as i64;
        if n == 0 {
            c64::new(radius.ln() / (2.0 * PI), 0.0)
        } else {
            c64::new(-1.0 / (4.0 * PI * n.unsigned_abs() as f64), 0.0)
        }
    })
}

fn ln_binomial(n: u64, k: u64) -> f64 {
    let k = k.min(n - k);
    (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}

/// Entry `(n', n)` of the off-diagonal block `(p, q)`, `p ≠ q`.
pub fn green_mutual_entry(p: &Conductor, q: &Conductor, n_test: i64, n: i64) -> c64 {
    if n < 0 || (n == 0 && n_test < 0) {
        return green_mutual_entry(p, q, -n_test, -n).conj();
    }
    let x = p.center_x - q.center_x;
    let y = p.center_y - q.center_y;
    let d = x.hypot(y);
    if n == 0 {
        if n_test == 0 {
            return c64::new(d.ln() / (2.0 * PI), 0.0);
        }
        // -(1/4π|n'|) (a_p/d)^{|n'|} (-(x - jy)/d)^{n'}, here n' > 0
        let k = n_test as i32;
        let base = c64::new(-x / d, y / d);
        let mag = (p.radius / d).powi(k) / (4.0 * PI * k as f64);
        return -mag * base.powi(k);
    }
    if n_test >= 1 {
        return c64::new(0.0, 0.0);
    }
    // n > 0, n' = -m ≤ 0:
    // -(a_q^n a_p^m / 4πn) (-1)^m C(n+m-1, m) (x - jy)^{-(n+m)}
    let m = (-n_test) as u64;
    let nn = n as u64;
    let log_mag = nn as f64 * (q.radius / d).ln()
        + m as f64 * (p.radius / d).ln()
        + ln_binomial(nn + m - 1, m);
    let mag = log_mag.exp() / (4.0 * PI * nn as f64);
    let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
    // (x - jy)^{-(n+m)} / d^{-(n+m)} = e^{j (n+m) atan2(y, x)}
    let phase = (nn + m) as f64 * y.atan2(x);
    c64::from_polar(sign * mag, phase)
}

/// Dense, frequency-independent Green matrix for one geometry and layout.
#[derive(Debug, Clone)]
pub struct GreenMatrix {
    pub data: Mat<c64>,
    pub layout: HarmonicLayout,
    pub geometry_hash: String,
}

impl GreenMatrix {
    pub fn size(&self) -> usize {
        self.layout.size()
    }
}

pub fn assemble_green(cs: &CrossSection, layout: &HarmonicLayout) -> Result<GreenMatrix, GreenError> {
    layout.check(cs)?;
    for (p, cp) in cs.conductors.iter().enumerate() {
        for cq in &cs.conductors[p + 1..] {
            if cp.center_x == cq.center_x && cp.center_y == cq.center_y {
                return Err(GreenError::Coincident(cp.id, cq.id));
            }
        }
    }
    ASSEMBLIES.fetch_add(1, Ordering::SeqCst);
    let size = layout.size();
    let self_blocks: Vec<Mat<c64>> = cs
        .conductors
        .iter()
        .enumerate()
        .map(|(p, c)| green_self_block(c.radius, layout.order(p)))
        .collect();
    let rows: Vec<(usize, i64)> = (0..size).map(|g| layout.locate(g)).collect();
    let mut data = Mat::<c64>::zeros(size, size);
    data.as_mut().par_col_iter_mut().enumerate().for_each(|(j, mut col)| {
        let (q, n) = rows[j];
        let cq = &cs.conductors[q];
        for (i, &(p, n_test)) in rows.iter().enumerate() {
            col[i] = if p == q {
                let nq = layout.order(q) as i64;
                self_blocks[q][((n_test + nq) as usize, (n + nq) as usize)]
            } else {
                green_mutual_entry(&cs.conductors[p], cq, n_test, n)
            };
        }
    });
    Ok(GreenMatrix {
        data,
        layout: layout.clone(),
        geometry_hash: cs.geometry_hash(),
    })
}

const CACHE_MAGIC: &[u8; 8] = b"PULGREEN";
const CACHE_VERSION: u32 = 1;

/// Cache key: geometry hash followed by the truncation orders.
pub fn cache_key(cs: &CrossSection, layout: &HarmonicLayout) -> String {
    let orders: Vec<String> = layout.orders().iter().map(|o| o.to_string()).collect();
    format!("{}:{}", cs.geometry_hash(), orders.join(","))
}

/// Writes `magic | version u32 | N u64 | key_len u32 | key | row-major (re, im) f64`,
/// all little-endian, through a temporary file renamed into place.
pub fn write_cache(path: &Path, green: &GreenMatrix, key: &str) -> Result<(), GreenError> {
    let size = green.size();
    let mut buf = Vec::with_capacity(32 + key.len() + 16 * size * size);
    buf.extend_from_slice(CACHE_MAGIC);
    buf.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    buf.extend_from_slice(&(size as u64).to_le_bytes());
    buf.extend_from_slice(&(key.len() as u32).to_le_bytes());
    buf.extend_from_slice(key.as_bytes());
    for i in 0..size {
        for j in 0..size {
            let v = green.data[(i, j)];
            buf.extend_from_slice(&v.re.to_le_bytes());
            buf.extend_from_slice(&v.im.to_le_bytes());
        }
    }
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let tmp = dir.join(format!(
        ".{}.tmp{}",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("green"),
        std::process::id()
    ));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(&buf)?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

/// Reads a cache file; returns `Ok(None)` when the stored key differs.
pub fn read_cache(
    path: &Path,
    layout: &HarmonicLayout,
    key: &str,
    geometry_hash: &str,
) -> Result<Option<GreenMatrix>, GreenError> {
    let mut bytes = Vec::new();
    std::fs::File::open(path)?.read_to_end(&mut bytes)?;
    let bad = |m: &str| GreenError::Cache(m.to_string());
    if bytes.len() < 24 || &bytes[..8] != CACHE_MAGIC {
        return Err(bad("bad magic"));
    }
    let version = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
    if version != CACHE_VERSION {
        return Err(bad("unsupported version"));
    }
    let size = u64::from_le_bytes(bytes[12..20].try_into().unwrap()) as usize;
    let key_len = u32::from_le_bytes(bytes[20..24].try_into().unwrap()) as usize;
    let body = 24 + key_len;
    if bytes.len() < body {
        return Err(bad("truncated header"));
    }
    if &bytes[24..body] != key.as_bytes() || size != layout.size() {
        return Ok(None);
    }
    if bytes.len() != body + 16 * size * size {
        return Err(bad("truncated data"));
    }
    let f = |k: usize| f64::from_le_bytes(bytes[k..k + 8].try_into().unwrap());
    let data = Mat::from_fn(size, size, |i, j| {
        let k = body + 16 * (i * size + j);
        c64::new(f(k), f(k + 8))
    });
    Ok(Some(GreenMatrix {
        data,
        layout: layout.clone(),
        geometry_hash: geometry_hash.to_string(),
    }))
}
