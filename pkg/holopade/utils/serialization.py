"""JSON reports: a schema-versioned envelope written with write-then-rename."""
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Union

log = logging.getLogger()

SCHEMA_VERSION = 1


def envelope(command: str, result: Union[dict, list], config: Optional[dict] = None) -> dict:
    out = {'schema_version': SCHEMA_VERSION, 'command': command, 'result': result}
    if config is not None:
        out['config'] = config
    return out


def dumps(payload: Union[dict, list]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def write_atomic(path: Union[str, Path], text: str):
    """Write through a temporary file in the target directory, then rename over `path`."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f'.{path.name}.', suffix='.tmp', dir=path.parent)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    log.info(f'wrote {path}')


def load(path: Union[str, Path]) -> dict:
    with open(path, encoding='utf-8') as f:
        return json.load(f)
