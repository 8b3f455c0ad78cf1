from pydantic_settings import BaseSettings
from typing import Literal
import os

class Settings(BaseSettings):
    # Logging
    log_level: str = os.getenv("LOG_LEVEL", "WARNING")
    dinterval_log: Literal["off", "info", "trace"] = os.getenv("DINTERVAL_LOG", "off").lower()

    # Split search budgets
    node_budget: int = int(os.getenv("DINTERVAL_NODE_BUDGET", "1000000000"))
    time_budget_seconds: float = float(os.getenv("DINTERVAL_TIME_BUDGET", "1800"))
    threads: int = int(os.getenv("DINTERVAL_THREADS", "1"))
    memo_limit: int = int(os.getenv("DINTERVAL_MEMO_LIMIT", "1000000"))

    # Construction
    pad_dummies: bool = os.getenv("DINTERVAL_PAD_DUMMIES", "true").lower() == "true"

    class Config:
        env_file = ".env"
        case_sensitive = False
        extra = "ignore"

# Create global settings instance
settings = Settings()
