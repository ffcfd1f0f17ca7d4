"""Exact computations for Nakajima operators on the Hilbert scheme Fock space,
hook-product identities, localization series and their q-expansions."""

__version__ = "0.1.0"
