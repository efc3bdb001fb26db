import json
import logging
import os
from datetime import datetime
from typing import Optional

import pandas as pd
from pydantic import BaseModel

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


def setup_logging(level: int = logging.INFO):
    """Attach one console handler to the root logger."""
    root = logging.getLogger()
    root.setLevel(level)
    if not any(isinstance(h, logging.StreamHandler) for h in root.handlers):
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(console_handler)


def get_output_dir(output_dir: str) -> str:
    """A fresh timestamped directory under ``output_dir``."""
    timestamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
    return os.path.join(output_dir, timestamp)


def summary_frame(summary) -> pd.DataFrame:
    """Per-theorem verdict counts as a table, one row per theorem id."""
    df = pd.DataFrame.from_dict(summary, orient="index")
    df.index.name = "theorem"
    return df.reset_index()


def save_summary(summary, output_dir: str):
    """Save per-theorem verdict counts to summary.csv.

    Args:
        summary: Mapping of theorem id to verdict counts
        output_dir: Directory to save results
    """
    os.makedirs(output_dir, exist_ok=True)
    summary_file = f"{output_dir}/summary.csv"
    summary_frame(summary).to_csv(summary_file, index=False)
    logger.info(f"Summary saved to {summary_file}")


def save_model(model: BaseModel, path: str):
    """Write a pydantic model as indented JSON, creating parent directories."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w") as f:
        f.write(model.model_dump_json(indent=2))
        f.write("\n")


def save_report(report: BaseModel, out: Optional[str], output_dir: str = "results") -> str:
    """Save an audit report and its summary.csv.

    ``out`` names the JSON file or the directory to write into; without it a
    timestamped directory under ``output_dir`` is used.

    Returns:
        Path of the JSON report
    """
    if out and out.endswith(".json"):
        path = out
    elif out:
        path = os.path.join(out, "report.json")
    else:
        path = os.path.join(get_output_dir(output_dir), "report.json")
    save_model(report, path)
    save_summary(report.summary, os.path.dirname(path) or ".")
    logger.info(f"Report saved to {path}")
    return path


def load_json(path: str):
    with open(path, "r") as f:
        return json.load(f)
