import csv
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from src.storage.file_constants import CSV_LINE_TERMINATOR

logger = logging.getLogger(__name__)


class FileManager:
    """
    A centralized manager for file I/O below a base results directory.
    Relative names resolve against that directory; absolute paths are used as is.
    """

    def __init__(self, base_dir: Union[str, Path] = "."):
        self.base_dir = Path(base_dir).resolve()
        logger.debug("FileManager initialized. Base directory: %s", self.base_dir)

    def _ensure_dir_exists(self, dir_path: Path) -> None:
        """Ensure that the specified directory exists."""
        if not dir_path.exists():
            dir_path.mkdir(parents=True, exist_ok=True)
            logger.info("Created directory: %s", dir_path)

    def _get_full_path(self, filename: Union[str, Path]) -> Path:
        path = Path(filename)
        return path if path.is_absolute() else self.base_dir / path

    def read_text(self, filename: Union[str, Path], encoding: str = "utf-8") -> str:
        full_path = self._get_full_path(filename)
        if not full_path.exists():
            raise FileNotFoundError(f"File not found: {full_path}")
        return full_path.read_text(encoding=encoding)

    def write_csv(self, filename: Union[str, Path], data: Sequence[Sequence[str]],
                  header: Optional[Sequence[str]] = None, encoding: str = "utf-8") -> str:
        """Write rows with '\\n' line endings so output bytes do not depend on the platform."""
        full_path = self._get_full_path(filename)
        self._ensure_dir_exists(full_path.parent)
        with open(full_path, 'w', newline='', encoding=encoding) as f:
            writer = csv.writer(f, lineterminator=CSV_LINE_TERMINATOR)
            if header:
                writer.writerow(header)
            writer.writerows(data)
        logger.info("CSV written to: %s", full_path)
        return str(full_path)

    def read_csv(self, filename: Union[str, Path], encoding: str = "utf-8") -> List[Dict[str, str]]:
        """Read a CSV file with a header row into dictionaries."""
        full_path = self._get_full_path(filename)
        if not full_path.exists():
            raise FileNotFoundError(f"File not found: {full_path}")
        with open(full_path, 'r', newline='', encoding=encoding) as f:
            return list(csv.DictReader(f))
