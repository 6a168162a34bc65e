//! Physical constants and the unit system shared by all other modules.

/// Reduced Planck constant in eV·ps (CODATA 2018).
pub const HBAR_EV_PS: f64 = 6.582119569e-4;

/// ħc in eV·nm (CODATA 2018).
pub const HBAR_C_EV_NM: f64 = 197.3269804;

/// Coulomb factor e²/(4π ε₀) in eV·nm.
pub const COULOMB_EV_NM: f64 = 1.4399645478;

/// Conversion of a field–dipole product: 1 e·nm × 1 V/m = 1e-9 eV.
pub const FIELD_DIPOLE_TO_EV: f64 = 1e-9;

/// Bundle of the constants in the internal unit system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// ħ in eV·ps.
    pub hbar: f64,
    /// ħc in eV·nm.
    pub hbar_c: f64,
    /// e²/(4π ε₀) in eV·nm.
    pub coulomb_factor: f64,
    /// Relative permittivity of vacuum (the ε_B baseline).
    pub vacuum_permittivity_relative: f64,
}

impl Constants {
    pub const fn standard() -> Self {
        Self {
            hbar: HBAR_EV_PS,
            hbar_c: HBAR_C_EV_NM,
            coulomb_factor: COULOMB_EV_NM,
            vacuum_permittivity_relative: 1.0,
        }
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::standard()
    }
}

/// Convert an energy in eV to an angular frequency in 1/ps.
#[inline]
pub fn energy_to_angular_frequency(energy_ev: f64) -> f64 {
    energy_ev / HBAR_EV_PS
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_values() {
        let c = Constants::standard();
        assert!((c.hbar - 6.58211957e-4).abs() / 6.58211957e-4 < 1e-9);
        assert!((c.hbar_c - 197.32698).abs() / 197.32698 < 1e-6);
        assert!((c.coulomb_factor - 1.439964).abs() / 1.439964 < 1e-5);
        assert_eq!(c.vacuum_permittivity_relative, 1.0);
    }

    #[test]
    fn energy_conversion() {
        assert_eq!(energy_to_angular_frequency(0.0), 0.0);
        assert!((energy_to_angular_frequency(6.58211957e-4) - 1.0).abs() < 1e-9);
        // 2.5 eV / ħ, evaluated independently
        assert!((energy_to_angular_frequency(2.5) - 3798.1686199903183).abs() < 1e-9);
    }

    #[test]
    fn energy_conversion_is_linear() {
        for &a in &[0.5, 2.0, 4.0, 1024.0] {
            for &e in &[0.0, 1.0e-3, 2.5, 6.6] {
                assert_eq!(
                    energy_to_angular_frequency(a * e),
                    a * energy_to_angular_frequency(e)
                );
            }
        }
    }
}
