"""Grounded belief over topological evidence models with attack relations.

Worlds are indexed and propositions are int bitmasks over those indices;
:class:`~topoarg.core.Domain` translates between labels and masks.
"""

from importlib import resources
from pathlib import Path

from .argumentation import (AttackGraph, ExtensionFlags, ExtensionReport, characteristic,
                            classify_extension, defends, grounded_extension, validate_attack)
from .core import (AttackSpec, Domain, Model, PropositionSet, build_model, load_model,
                   model_from_json, model_to_json)
from .doxastics import (believes_evidence_based, believes_grounded, believes_maximal_body,
                        compare_beliefs, justification_set)
from .errors import AttackInvalid, FormulaSyntaxError, InvariantViolation, ModelError
from .generators import GeneratorConfig, generate_random_model
from .logic import (NeighborhoodModel, check_axioms, extension, from_neighborhood, parse,
                    to_neighborhood, to_text)
from .probabilistic import ProbabilisticModel, pb_grounded_correspondence, pmodel_from_json
from .sweep import run_sweep
from .topology import Topology, enumerate_bodies, generate_topology

__version__ = "0.1.0"


def fixture_path(name: str) -> Path:
    """Path of a bundled fixture: ``fig1``, ``zoo`` or ``uniform3``."""
    path = Path(str(resources.files(__package__) / "fixtures" / f"{name.removesuffix('.json')}.json"))
    if not path.exists():
        raise FileNotFoundError(f"no bundled fixture {name!r}")
    return path


__all__ = [
    "AttackGraph", "AttackInvalid", "AttackSpec", "Domain", "ExtensionFlags", "ExtensionReport",
    "FormulaSyntaxError", "GeneratorConfig", "InvariantViolation", "Model", "ModelError",
    "NeighborhoodModel", "ProbabilisticModel", "PropositionSet", "Topology",
    "believes_evidence_based", "believes_grounded", "believes_maximal_body", "build_model",
    "characteristic", "check_axioms", "classify_extension", "compare_beliefs", "defends",
    "enumerate_bodies", "extension", "fixture_path", "from_neighborhood",
    "generate_random_model", "generate_topology", "grounded_extension", "justification_set",
    "load_model", "model_from_json", "model_to_json", "parse", "pb_grounded_correspondence",
    "pmodel_from_json", "run_sweep", "to_neighborhood", "to_text", "validate_attack",
]
