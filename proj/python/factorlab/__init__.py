"""Exact factorization workbench: thin JSON-decoding wrappers over the
compiled core. Every function mirrors a CLI subcommand and returns plain
dicts/lists."""

import json

try:
    from factorlab import _factorlab as _core
except ImportError:  # in-tree test runs import the extension directly
    import _factorlab as _core

FactorlabError = _core.FactorlabError


def parse(text):
    """Canonical rendering of a DSL expression."""
    return _core.parse(text)


def ast(text):
    return json.loads(_core.ast(text))


def describe_ring(ring):
    return json.loads(_core.describe_ring(ring))


def classify(ring, satset, module="regular"):
    return json.loads(_core.classify(ring, module, satset))


def factorizations(ring, satset, target, module="regular", mode="atomic",
                   max_len=8):
    return json.loads(
        _core.factorizations(ring, module, satset, target, mode, max_len))


def split_check(ring, satset, module="regular"):
    return json.loads(_core.split_check(ring, module, satset))


def localize(ring, satset):
    return json.loads(_core.localize(ring, satset))


def verify(max_ring=6, max_module=6, theorems=(), workers=1):
    return json.loads(
        _core.verify(max_ring, max_module, list(theorems), workers))


def hunt(spec, max_ring=6, max_module=6, stop_after=-1, checkpoint=""):
    return json.loads(
        _core.hunt(spec, max_ring, max_module, stop_after, checkpoint))


def axb_splits(a, b, deg):
    return json.loads(_core.axb_splits(a, b, deg))


def axb_main(a, b, deg):
    return json.loads(_core.axb_main(a, b, deg))


def axb_zq():
    return json.loads(_core.axb_zq())


def nonbfd_witness(k):
    return json.loads(_core.nonbfd_witness(k))
