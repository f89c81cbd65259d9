from app.builders.dispatch import BUILD_KINDS, build_circuit
from app.builders.gf2n import build_addmult_gf2n, build_adder_gf2n, build_cmult_gf2n
from app.builders.gfp import build_addmult_gfp, build_cmult_gfp, build_mod_adder_gfp
from app.builders.gfpk import build_addmult_gfpk, build_adder_gfpk, build_cmult_gfpk
from app.builders.integer import (
    build_carry_sum_adder,
    build_cswap,
    build_phi_adder,
    build_phi_adder_sandwich,
    build_qft,
)

__all__ = [
    "BUILD_KINDS",
    "build_addmult_gf2n",
    "build_addmult_gfp",
    "build_addmult_gfpk",
    "build_adder_gf2n",
    "build_adder_gfpk",
    "build_carry_sum_adder",
    "build_circuit",
    "build_cmult_gf2n",
    "build_cmult_gfp",
    "build_cmult_gfpk",
    "build_cswap",
    "build_mod_adder_gfp",
    "build_phi_adder",
    "build_phi_adder_sandwich",
    "build_qft",
]
