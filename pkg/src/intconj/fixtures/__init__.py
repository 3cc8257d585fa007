"""Shipped problem, table and catalog files."""

from importlib.resources import files


def path(name):
    """Filesystem path of a shipped fixture, e.g. ``path("catalogs/x2p5.json")``."""
    return files(__name__).joinpath(name)
