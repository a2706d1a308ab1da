"""Simulation and verification toolkit for an ideal rotary logic element.

Thin wrappers around the compiled core: the *_json entry points of the
extension take and return JSON text; here they take and return plain dicts.
"""

import json as _json

from ._core import (
    AdmissibilityError,
    CollisionError,
    NetlistError,
    SchemaError,
    equation_step,
    mutation_count,
    phi,
    phi_inv,
    simulate_vcd as _simulate_vcd,
    circuit_vcd as _circuit_vcd,
    simulate_json as _simulate_json,
    run_suite_json as _run_suite_json,
    circuit_json as _circuit_json,
)

__all__ = [
    "AdmissibilityError",
    "CollisionError",
    "NetlistError",
    "SchemaError",
    "circuit",
    "circuit_vcd",
    "equation_step",
    "mutation_count",
    "phi",
    "phi_inv",
    "run_suite",
    "simulate",
    "simulate_vcd",
]


def simulate(document, inverse=False):
    """Run one element on an input document (dict); returns the trace dict."""
    return _json.loads(_simulate_json(_json.dumps(document), inverse))


def simulate_vcd(document, inverse=False):
    """Run one element; returns the trace as value-change-dump text."""
    return _simulate_vcd(_json.dumps(document), inverse)


def run_suite(depth=3, samples=0, seed=0, mutation=0):
    """Run the claim checker suite; returns the report dict."""
    return _json.loads(_run_suite_json(depth, samples, seed, mutation))


def circuit(netlist, horizon):
    """Simulate a netlist document (dict) strictly before `horizon`."""
    return _json.loads(_circuit_json(_json.dumps(netlist), str(horizon)))


def circuit_vcd(netlist, horizon):
    """Simulate a netlist; returns every element as value-change-dump text."""
    return _circuit_vcd(_json.dumps(netlist), str(horizon))
