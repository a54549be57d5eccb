"""Exact computations with Lie algebroids given by polynomial structure data.

The compiled core speaks JSON strings; these wrappers give a dict-in /
dict-out surface. See the project README for the wire formats.
"""

import json as _json

from algebroid import _core
from algebroid._core import AlgebroidError, ParseError, SliceError

__all__ = [
    "AlgebroidError",
    "ParseError",
    "SliceError",
    "list_examples",
    "load_example",
    "run_example",
    "validate",
    "bracket",
    "anchor_apply",
    "cohomology",
    "delta",
    "evaluate_cochain",
    "check_cocycle",
    "find_primitive",
    "deform",
    "family_check",
    "family_cocycle",
    "mc_check",
    "nijenhuis",
    "schouten",
    "cotangent_algebroid",
    "pi_rep",
    "jet_bracket",
    "jet_pairing",
    "jet_lie_derivative",
    "d_jet",
    "jacobiator",
    "jet_eval",
    "h0",
    "h1",
]


def _out(s):
    return _json.loads(s)


def _in(obj):
    return _json.dumps(obj)


def list_examples():
    return _core.list_examples()


def load_example(name):
    return _out(_core.load_example(name))


def run_example(name):
    return _out(_core.run_example(name))


def validate(algebroid):
    return _out(_core.validate(_in(algebroid)))


def bracket(algebroid, x, y):
    return _out(_core.bracket(_in(algebroid), _in(x), _in(y)))


def anchor_apply(algebroid, x):
    return _out(_core.anchor_apply(_in(algebroid), _in(x)))


def cohomology(algebroid, kmax, slice_degree=0, jobs=1):
    return _out(_core.cohomology(_in(algebroid), kmax, slice_degree, jobs))


def delta(algebroid, cochain):
    return _out(_core.delta(_in(algebroid), _in(cochain)))


def evaluate_cochain(algebroid, cochain, sections):
    return _out(_core.evaluate_cochain(_in(algebroid), _in(cochain), _in(sections)))


def check_cocycle(algebroid, cochain):
    return _core.check_cocycle(_in(algebroid), _in(cochain))


def find_primitive(algebroid, cochain, slice_degree=0, jobs=1):
    return _out(_core.find_primitive(_in(algebroid), _in(cochain), slice_degree, jobs))


def deform(algebroid, cochain):
    return _out(_core.deform(_in(algebroid), _in(cochain)))


def family_check(family):
    return _out(_core.family_check(_in(family)))


def family_cocycle(family):
    return _out(_core.family_cocycle(_in(family)))


def mc_check(algebroid, cochain):
    return _out(_core.mc_check(_in(algebroid), _in(cochain)))


def nijenhuis(algebroid, matrix):
    return _out(_core.nijenhuis(_in(algebroid), _in(matrix)))


def schouten(p, q):
    return _out(_core.schouten(_in(p), _in(q)))


def cotangent_algebroid(pi):
    return _out(_core.cotangent_algebroid(_in(pi)))


def pi_rep(algebroid, jet):
    return _out(_core.pi_rep(_in(algebroid), _in(jet)))


def jet_bracket(algebroid, m1, m2):
    return _out(_core.jet_bracket(_in(algebroid), _in(m1), _in(m2)))


def jet_pairing(algebroid, jet, op):
    return _out(_core.jet_pairing(_in(algebroid), _in(jet), _in(op)))


def jet_lie_derivative(algebroid, op, jet):
    return _out(_core.jet_lie_derivative(_in(algebroid), _in(op), _in(jet)))


def d_jet(algebroid, cochain):
    return _out(_core.d_jet(_in(algebroid), _in(cochain)))


def jacobiator(algebroid, cochain):
    return _out(_core.jacobiator(_in(algebroid), _in(cochain)))


def jet_eval(algebroid, cochain, jets):
    return _out(_core.jet_eval(_in(algebroid), _in(cochain), _in(jets)))


def h0(algebroid, slice_degree=0):
    return _out(_core.h0(_in(algebroid), slice_degree))


def h1(algebroid, slice_degree=0, jobs=1):
    return _out(_core.h1(_in(algebroid), slice_degree, jobs))
