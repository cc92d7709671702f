"""Ordinal-bounded Noetherian witnesses, their certificates and a verifier.

Submodules are imported on demand so that ``noethera.cert`` (the verifier)
loads no witness code.
"""

__version__ = "0.1.0"
