# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
#
#   Copyright 2024 Valory AG
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#
# ------------------------------------------------------------------------------

"""JSON resource representation."""

import enum
import json
import typing as t
from dataclasses import fields, is_dataclass
from pathlib import Path

from chroma_planes.constants import JSON_INDENT


# pylint: disable=too-many-return-statements


def serialize(obj: t.Any) -> t.Any:
    """Serialize object."""
    if isinstance(obj, LocalResource):
        return obj.json
    if is_dataclass(obj):
        return {f.name: serialize(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, Path):
        return str(obj)
    if isinstance(obj, dict):
        return {str(key): serialize(obj=value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [serialize(obj=value) for value in obj]
    if isinstance(obj, enum.Enum):
        return obj.value
    return obj


def deserialize(obj: t.Any, otype: t.Any) -> t.Any:
    """Deserialize a json object."""
    origin = t.get_origin(otype)
    args = t.get_args(otype)
    if origin is t.Union:
        if obj is None:
            return None
        (atype,) = [arg for arg in args if arg is not type(None)]
        return deserialize(obj, atype)
    if origin is list:
        (atype,) = args
        return [deserialize(arg, atype) for arg in obj]
    if origin is tuple:
        if len(args) == 2 and args[1] is Ellipsis:
            return tuple(deserialize(arg, args[0]) for arg in obj)
        return tuple(deserialize(arg, atype) for arg, atype in zip(obj, args))
    if origin is dict:
        (ktype, vtype) = args
        return {
            deserialize(key, ktype): deserialize(val, vtype)
            for key, val in obj.items()
        }
    if isinstance(otype, type) and issubclass(otype, enum.Enum):
        return obj if isinstance(obj, otype) else otype(obj)
    if otype is Path:
        return Path(obj)
    if otype is int and isinstance(obj, str):
        return int(obj)
    if isinstance(otype, type) and issubclass(otype, LocalResource):
        return otype.from_json(obj)
    return obj


def dumps(obj: t.Any) -> str:
    """Stable JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(serialize(obj), indent=JSON_INDENT, sort_keys=True) + "\n"


class LocalResource:
    """Dataclass mixin that round-trips through JSON."""

    @property
    def json(self) -> t.Dict:
        """To dictionary object."""
        obj = {}
        for pname in t.get_type_hints(type(self)):
            if pname.startswith("_"):
                continue
            obj[pname] = serialize(self.__dict__[pname])
        return obj

    @classmethod
    def from_json(cls, obj: t.Dict) -> t.Any:
        """Load LocalResource from json."""
        kwargs = {}
        for pname, ptype in t.get_type_hints(cls).items():
            if pname.startswith("_") or pname not in obj:
                continue
            kwargs[pname] = deserialize(obj=obj[pname], otype=ptype)
        return cls(**kwargs)

    @classmethod
    def load(cls, path: Path) -> t.Any:
        """Load local resource."""
        return cls.from_json(obj=json.loads(path.read_text(encoding="utf-8")))

    def dumps(self) -> str:
        """Stable JSON text."""
        return dumps(self.json)

    def store(self, path: Path) -> None:
        """Store local resource."""
        path.write_text(self.dumps(), encoding="utf-8")
