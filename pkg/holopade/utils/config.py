"""Run configuration: packaged defaults < TOML run file < command-line flags."""
import dataclasses
import logging
from pathlib import Path
from typing import Any, Optional, Union

import toml
from omegaconf import OmegaConf
from omegaconf.errors import OmegaConfBaseException

from ..errors import ConfigError

log = logging.getLogger()

_defaults_path = Path(__file__).parent.parent / 'configs' / 'defaults.yaml'

FORMATS = ('json', 'markdown')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


@dataclasses.dataclass(frozen=True)
class RunConfig:
    command: Optional[str]
    precision: int
    format: str
    out: Optional[str]
    dump_matrix: bool
    log_level: str
    workers: int
    seed: int
    slack: int
    family: Optional[str]
    u: Optional[int]
    d: Optional[int]
    gamma: tuple[str, ...]
    delta: tuple[str, ...]
    alpha: tuple[str, ...]
    a: Optional[str]
    a1: Optional[str]
    b: tuple[str, ...]
    n: str
    h: Optional[int]
    N: str
    n_max: int
    us: str
    place: str
    eps: str
    decay_slack: Optional[float]
    beta: tuple[str, ...]

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ConfigError(f'format must be one of {FORMATS}, got {self.format!r}')
        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigError(f'log_level must be one of {LOG_LEVELS}, got {self.log_level!r}')
        if self.precision < 16:
            raise ConfigError(f'precision must be at least 16 bits, got {self.precision}')
        if self.workers < 1:
            raise ConfigError(f'workers must be positive, got {self.workers}')
        if self.slack < 1:
            raise ConfigError(f'slack must be positive, got {self.slack}')

    @property
    def digits(self) -> int:
        """Decimal digits used when rendering reals."""
        return max(int(self.precision * 0.30103) - 3, 5)

    def to_json(self) -> dict:
        out = dataclasses.asdict(self)
        for name in ('gamma', 'delta', 'alpha', 'b', 'beta'):
            out[name] = list(out[name])
        return out


def _coerce(values: dict) -> dict:
    out = dict(values)
    for name in ('gamma', 'delta', 'alpha', 'b', 'beta'):
        out[name] = tuple(str(x) for x in out[name] or ())
    for name in ('n', 'N', 'us', 'place', 'eps'):
        out[name] = str(out[name])
    for name in ('a', 'a1'):
        if out[name] is not None:
            out[name] = str(out[name])
    out['log_level'] = str(out['log_level']).upper()
    return out


def load_config(flags: Optional[dict[str, Any]] = None,
                config_path: Union[str, Path, None] = None,
                *,
                defaults_path: Union[str, Path] = _defaults_path) -> RunConfig:
    """Merge the three layers; unknown keys and ill-typed values raise ConfigError."""
    cfg = OmegaConf.load(defaults_path)
    OmegaConf.set_struct(cfg, True)
    layers = []
    if config_path is not None:
        try:
            layers.append(OmegaConf.create(toml.load(config_path)))
        except (OSError, toml.TomlDecodeError) as e:
            raise ConfigError(f'cannot read run file {config_path}: {e}') from e
    if flags:
        layers.append(OmegaConf.create(flags))
    try:
        cfg = OmegaConf.merge(cfg, *layers)
        values = OmegaConf.to_container(cfg, resolve=True)
    except OmegaConfBaseException as e:
        raise ConfigError(f'invalid configuration: {e}') from e
    try:
        config = RunConfig(**_coerce(values))
    except TypeError as e:
        raise ConfigError(f'invalid configuration: {e}') from e
    log.debug(f'effective configuration: {config}')
    return config
