import json
import logging
import os
import sys
from typing import Iterable, List

from ..errors import InstanceFormatError

logger = logging.getLogger(__name__)


def ensure_directory_exists(file_path: str) -> str:
    """Creates the parent directory of an output file (trace, instance) if needed; returns it."""
    parent = os.path.dirname(os.path.abspath(file_path))
    if not os.path.isdir(parent):
        logger.info(f"Creating output directory {parent}")
        os.makedirs(parent, exist_ok=True)
    return parent


def read_text_source(file_path: str) -> str:
    """Reads a whole text file; '-' reads stdin."""
    if file_path == "-":
        return sys.stdin.read()
    with open(file_path, 'r', encoding='utf-8') as f:
        return f.read()


def write_text_file(text: str, file_path: str) -> None:
    ensure_directory_exists(file_path)
    with open(file_path, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info(f"Data successfully written to {file_path}")


def write_jsonl_file(records: Iterable[dict], file_path: str) -> None:
    """Writes one compact JSON object per line."""
    write_text_file("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records), file_path)


def read_jsonl_file(file_path: str) -> List[dict]:
    records = []
    for lineno, line in enumerate(read_text_source(file_path).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            records.append(json.loads(line))
        except json.JSONDecodeError as e:
            logger.error(f"Could not decode JSON from {file_path} line {lineno}: {e}")
            raise InstanceFormatError(f"{file_path}:{lineno}: invalid JSON line: {e}") from e
    return records
