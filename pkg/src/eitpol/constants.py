"""Physical constants in SI units with energies expressed as angular frequencies."""

C_LIGHT = 299792458.0  # vacuum light speed, m/s

# Bohr magneton over hbar: magnetic moments are carried as angular frequency
# per tesla so that potentials come out in rad/s directly.
MU_BOHR = 9.2740100783e-24 / 1.054571817e-34  # rad/(s*T)
