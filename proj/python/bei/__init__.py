import json

from ._core import *  # noqa: F401,F403
from ._core import classify_json


def classify(g, s2=False, complex=False, short_circuit=False):
    """Full classification record of ``g`` as a dict."""
    return json.loads(classify_json(g, s2=s2, complex=complex, short_circuit=short_circuit))
