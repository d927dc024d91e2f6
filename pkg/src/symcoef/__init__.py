"""Exact computation of symmetric-group coefficient families.

Characters (Murnaghan-Nakayama), Kostka and Littlewood-Richardson
coefficients (tableau enumeration), Kronecker and stable Kronecker
coefficients (class sums), Schubert polynomials and Stanley symmetric
functions, and verified witnesses for each family.
"""
from .characters import an_character, char_interval, character_table, mn_character
from .kronecker import kronecker, pad, stable_kronecker
from .partitions import Partition, class_size, conjugate, gen_partitions
from .schubert import (
    Permutation,
    expand_in_schubert_basis,
    grassmannian_to_schur,
    schubert_poly,
    schubert_structure_constant,
    skew_shape_of_321_avoiding,
    stanley_expansion,
)
from .tableaux import SkewShape, count_ssyt, kostka, kostka_as_lr, lr_coefficient, skew_schur_expansion
from .witnesses import (
    an_witness,
    char_witness,
    enumerate_value_class,
    kostka_witness,
    kron_witness,
    lr_witness,
    witness,
)

__version__ = "0.1.0"
