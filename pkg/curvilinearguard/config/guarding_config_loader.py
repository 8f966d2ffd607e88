import collections
import os
from dataclasses import dataclass, field
from typing import Optional

import yaml
from dacite import Config, from_dict
from jinja2 import Template
from yaml import MappingNode
from yaml.constructor import ConstructorError

from curvilinearguard.tracking_decorator import TrackingDecorator


@dataclass
class Verification:
    density: Optional[int] = 50
    arc_samples: Optional[int] = 64


@dataclass
class Exhaustive:
    mode: Optional[str] = "diagonal"
    max_n: Optional[int] = 12
    algorithm: Optional[str] = None


@dataclass
class Random:
    seed: Optional[int] = 0


@dataclass
class Rendering:
    width: Optional[int] = 600
    margin: Optional[float] = 0.05
    stroke_width: Optional[float] = 1.5
    guard_stroke_width: Optional[float] = 4.0


@dataclass
class GuardingConfig:
    verification: Optional[Verification] = field(default_factory=Verification)
    exhaustive: Optional[Exhaustive] = field(default_factory=Exhaustive)
    random: Optional[Random] = field(default_factory=Random)
    rendering: Optional[Rendering] = field(default_factory=Rendering)


class Loader(yaml.SafeLoader):
    """
    Custom loader that keeps the mode values raw, so that "edge" or "diagonal"
    never turn into anything but strings
    """

    raw_fields = ["mode"]

    def construct_mapping(self, node, deep=False):
        if not isinstance(node, MappingNode):
            raise ConstructorError(
                None,
                None,
                "expected a mapping node, but found %s" % node.id,
                node.start_mark,
            )
        mapping = {}
        for key_node, value_node in node.value:
            key = self.construct_object(key_node, deep=deep)
            if not isinstance(key, collections.abc.Hashable):
                raise ConstructorError(
                    "while constructing a mapping",
                    node.start_mark,
                    "found unhashable key",
                    key_node.start_mark,
                )

            if key in self.raw_fields:
                value = value_node.value
            else:
                value = self.construct_object(value_node, deep=deep)

            mapping[key] = value
        return mapping


@TrackingDecorator.track_time
def load_guarding_config(
    config_path, context=None, file_name="guarding-config.yml", quiet=False
) -> GuardingConfig:
    """
    Loads the run configuration, falling back to the defaults
    :param config_path: directory holding the file
    :param context: optional jinja2 context the file is rendered with first
    :param file_name: name of the file
    :param quiet: suppress the notice about a missing file
    :return: configuration
    """
    guarding_config_path = os.path.join(config_path, file_name)

    if os.path.exists(guarding_config_path):
        with open(guarding_config_path, "r") as file:
            # PyYAML reads exponent floats such as 1e-3 as strings
            config = Config(type_hooks={float: float})

            if context is None:
                data = yaml.load(file, Loader=Loader)
            else:
                template = Template(file.read()).render(context)
                data = yaml.load(template, Loader=Loader)
        guarding_config = from_dict(data_class=GuardingConfig, data=data or {}, config=config)
        return _with_defaults(guarding_config)
    else:
        not quiet and print(f"✗️ Config file {guarding_config_path} does not exist")
        return GuardingConfig()


def _with_defaults(guarding_config: GuardingConfig) -> GuardingConfig:
    """Empty sections in the file fall back to their defaults"""
    defaults = GuardingConfig()
    for name in ("verification", "exhaustive", "random", "rendering"):
        if getattr(guarding_config, name) is None:
            setattr(guarding_config, name, getattr(defaults, name))
    return guarding_config
