//! Tabulated metal permittivity and the complex nanoparticle response factor.

use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Smallest allowed |2 eps_b + eps_m| relative to |eps_b| before the response
/// factor is considered to sit on the plasmon pole.
const POLE_THRESHOLD: f64 = 1e-12;

/// Tabulated complex permittivity of the nanoparticle metal vs photon energy.
///
/// Rows are strictly increasing in photon energy. Evaluation interpolates the
/// real and imaginary parts linearly and refuses to extrapolate.
#[derive(Debug, Clone)]
pub struct DielectricTable {
    rows: Vec<(f64, Complex64)>,
    source_label: String,
}

impl DielectricTable {
    /// Gold optical constants of Johnson & Christy (Phys. Rev. B 6, 4370
    /// (1972)), shipped with the crate.
    pub fn gold() -> Self {
        static GOLD_CSV: &str = include_str!("../data/johnson_christy_gold.csv");
        Self::parse_csv(GOLD_CSV, "Au (Johnson & Christy 1972)")
            .expect("embedded gold table is valid")
    }

    /// Load a table from a CSV file.
    ///
    /// The file must have a header row naming either
    /// `energy_ev,eps_re,eps_im` or `energy_ev,n,k`; lines starting with `#`
    /// are ignored. With the `n,k` schema the permittivity is formed as
    /// ε = (n + i k)².
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse_csv(&text, &path.display().to_string())
    }

    /// Parse CSV text (same schema as [`DielectricTable::load`]).
    pub fn parse_csv(text: &str, source_label: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());

        let headers: Vec<String> = reader
            .headers()
            .map_err(|e| Error::TableFormat(format!("cannot read header: {e}")))?
            .iter()
            .map(|h| h.to_ascii_lowercase())
            .collect();
        let nk_schema = match headers
            .iter()
            .map(String::as_str)
            .collect::<Vec<_>>()
            .as_slice()
        {
            ["energy_ev", "eps_re", "eps_im"] => false,
            ["energy_ev", "n", "k"] => true,
            other => {
                return Err(Error::TableFormat(format!(
                    "unknown columns {other:?}; expected energy_ev,eps_re,eps_im or energy_ev,n,k"
                )))
            }
        };

        let mut rows = Vec::new();
        for (idx, record) in reader.records().enumerate() {
            let record =
                record.map_err(|e| Error::TableFormat(format!("row {}: {e}", idx + 2)))?;
            if record.len() != 3 {
                return Err(Error::TableFormat(format!(
                    "row {}: expected 3 fields, found {}",
                    idx + 2,
                    record.len()
                )));
            }
            let mut fields = [0.0f64; 3];
            for (k, raw) in record.iter().enumerate() {
                fields[k] = raw.parse().map_err(|_| {
                    Error::TableFormat(format!("row {}: non-numeric field {raw:?}", idx + 2))
                })?;
            }
            let eps = if nk_schema {
                let nk = Complex64::new(fields[1], fields[2]);
                nk * nk
            } else {
                Complex64::new(fields[1], fields[2])
            };
            if eps.im < 0.0 {
                return Err(Error::TableFormat(format!(
                    "row {}: Im eps = {} violates passivity",
                    idx + 2,
                    eps.im
                )));
            }
            rows.push((fields[0], eps));
        }

        if rows.len() < 2 {
            return Err(Error::TableFormat(format!(
                "table needs at least 2 rows, found {}",
                rows.len()
            )));
        }
        rows.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite energies"));
        for pair in rows.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::DuplicateAbscissa { energy: pair[0].0 });
            }
        }

        Ok(Self {
            rows,
            source_label: source_label.to_string(),
        })
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Tabulated rows as (photon energy in eV, permittivity).
    pub fn rows(&self) -> impl Iterator<Item = (f64, Complex64)> + '_ {
        self.rows.iter().copied()
    }

    /// Inclusive photon-energy range covered by the table, in eV.
    pub fn energy_range(&self) -> (f64, f64) {
        (self.rows[0].0, self.rows[self.rows.len() - 1].0)
    }

    /// Permittivity at `energy_ev`, linearly interpolated. No extrapolation.
    pub fn permittivity(&self, energy_ev: f64) -> Result<Complex64> {
        let (min, max) = self.energy_range();
        if !(energy_ev >= min && energy_ev <= max) {
            return Err(Error::OutOfRange {
                energy: energy_ev,
                min,
                max,
            });
        }
        let hi = self
            .rows
            .partition_point(|(e, _)| *e < energy_ev)
            .min(self.rows.len() - 1)
            .max(1);
        let (e0, v0) = self.rows[hi - 1];
        let (e1, v1) = self.rows[hi];
        if energy_ev == e0 {
            return Ok(v0);
        }
        if energy_ev == e1 {
            return Ok(v1);
        }
        let w = (energy_ev - e0) / (e1 - e0);
        Ok(Complex64::new(
            v0.re + w * (v1.re - v0.re),
            v0.im + w * (v1.im - v0.im),
        ))
    }
}

/// Response factor γ = (ε_M − ε_B) / (2 ε_B + ε_M) of a small metal sphere.
pub fn gamma_factor(eps_m: Complex64, eps_b: Complex64) -> Result<Complex64> {
    let denom = 2.0 * eps_b + eps_m;
    if denom.norm() <= POLE_THRESHOLD * eps_b.norm().max(1.0) {
        return Err(Error::PlasmonPole {
            denom: denom.norm(),
        });
    }
    Ok((eps_m - eps_b) / denom)
}

/// Scan |γ| on a dense energy grid over the table range.
///
/// Returns (photon energy of the maximum, max |γ|). `scan_points` is the
/// number of grid intervals.
pub fn peak_gamma(
    table: &DielectricTable,
    eps_b: Complex64,
    scan_points: usize,
) -> Result<(f64, f64)> {
    let (min, max) = table.energy_range();
    let n = scan_points.max(1);
    let mut best = (min, f64::NEG_INFINITY);
    for k in 0..=n {
        let e = min + (max - min) * (k as f64) / (n as f64);
        let g = gamma_factor(table.permittivity(e)?, eps_b)?;
        if g.norm() > best.1 {
            best = (e, g.norm());
        }
    }
    Ok(best)
}
