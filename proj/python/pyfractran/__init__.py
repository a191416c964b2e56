"""Fractran interpreter, Turing machine compiler and lazy stream specifications."""

from ._core import (
    FractranError,
    Program,
    check_simulation,
    compile_tm,
    prime_exponents,
    primegame,
    probe,
    rewrite_nth,
    translate,
)

__all__ = [
    "FractranError",
    "Program",
    "check_simulation",
    "compile_tm",
    "prime_exponents",
    "primegame",
    "probe",
    "rewrite_nth",
    "translate",
]
