"""Shipped fixture files: example orders and the test-grid manifest."""

import json
from importlib import resources


def fixture_text(name):
    return resources.files(__package__).joinpath(name).read_text()


def load_fixture_json(name):
    return json.loads(fixture_text(name))


def load_fixture_order(name):
    from ..orders import OrderInput
    return OrderInput.from_json_obj(load_fixture_json(name))


def load_grid_manifest():
    return load_fixture_json("grid.json")
