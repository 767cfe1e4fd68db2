import json
from fractions import Fraction
from typing import Any

import numpy as np
from pydantic import BaseModel

from kloosterman.core.exceptions import InconsistentInputError


class KloostermanJSONEncoder(json.JSONEncoder):
    """JSON encoder for result models, numpy scalars and exact rationals.

    Python integers are left alone; models decide themselves which integers become strings.
    """

    def default(self, o: object) -> Any:
        if isinstance(o, BaseModel):
            return o.model_dump(mode="json", by_alias=True)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, Fraction):
            return str(o)
        return super().default(o)


# Create a single reusable encoder instance
_json_encoder = KloostermanJSONEncoder()


def dumps(obj, **kwargs):
    """Serialize an object to str format"""
    if not kwargs:
        return _json_encoder.encode(obj)

    encoder_kwargs = kwargs.copy()
    if "cls" not in encoder_kwargs:
        encoder_kwargs["cls"] = KloostermanJSONEncoder

    return json.dumps(obj, **encoder_kwargs)


def loads(json_str, **kwargs):
    """Create a JSON object from str"""
    try:
        return json.loads(json_str, **kwargs)
    except json.JSONDecodeError as e:
        raise InconsistentInputError(f"Not a valid JSON document: {e.msg}")
