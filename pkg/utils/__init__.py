from .utils import (
    setup_logging, get_output_dir, summary_frame, save_summary, save_model, save_report, load_json,
)
from .config import AuditSettings, load_settings

all = [
    setup_logging, get_output_dir, summary_frame, save_summary, save_model, save_report, load_json,
    AuditSettings, load_settings,
]
