"""Spectral decomposition of one-row crystal path spaces and Kostka-Foulkes polynomials."""

from .charge import charge_tableau, charge_word
from .crystal import CrystalElement, TensorElement, WeightK, energy
from .shapes import Composition, Partition, SkewShape
from .spectral import (
    FinitePath,
    SpectrumPoint,
    character_partial_sum,
    enumerate_spectrum,
    truncated_character,
    truncated_character_general,
)
from .symfunc import QPolynomial, kostka_foulkes, kostka_number, lr0_count
from .tableaux import Tableau, enumerate_tableaux, theta_d, theta_nu

__all__ = [
    "Composition",
    "CrystalElement",
    "FinitePath",
    "Partition",
    "QPolynomial",
    "SkewShape",
    "SpectrumPoint",
    "Tableau",
    "TensorElement",
    "WeightK",
    "character_partial_sum",
    "charge_tableau",
    "charge_word",
    "energy",
    "enumerate_spectrum",
    "enumerate_tableaux",
    "kostka_foulkes",
    "kostka_number",
    "lr0_count",
    "theta_d",
    "theta_nu",
    "truncated_character",
    "truncated_character_general",
]
