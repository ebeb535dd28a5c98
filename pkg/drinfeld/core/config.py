"""
DRINFELD Configuration Management

This module handles configuration for the whole library and the CLI.
Supports JSON and YAML files, environment overrides and built-in defaults.
"""

import os
import json
from typing import Dict, Any, Optional

import yaml
from dotenv import load_dotenv


class Config:
    """Configuration manager for DRINFELD."""

    ENV_OVERRIDES = {
        "DRINFELD_LOG_LEVEL": "logging.level",
        "DRINFELD_DEGREE_CEILING": "algebra.degree_ceiling",
        "DRINFELD_DEFAULT_PREC": "precision.default",
    }

    def __init__(self, config_file: Optional[str] = None):
        """Initialize configuration."""
        load_dotenv()
        self.config_file = config_file or os.getenv("DRINFELD_CONFIG", "drinfeld.json")
        self.config = self._load_config()
        self.environment = os.getenv("DRINFELD_ENV", "development")
        self._apply_env_overrides()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file, merged over the defaults."""
        config = self._get_default_config()
        try:
            if os.path.exists(self.config_file):
                with open(self.config_file, "r") as f:
                    if self.config_file.endswith((".yaml", ".yml")):
                        loaded = yaml.safe_load(f) or {}
                    else:
                        loaded = json.load(f)
                self._merge(config, loaded)
        except Exception as e:
            print(f"Error loading config: {e}")
        return config

    @staticmethod
    def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> None:
        for key, value in override.items():
            if isinstance(value, dict) and isinstance(base.get(key), dict):
                Config._merge(base[key], value)
            else:
                base[key] = value

    def _apply_env_overrides(self) -> None:
        for env_name, key in self.ENV_OVERRIDES.items():
            raw = os.getenv(env_name)
            if raw is None:
                continue
            current = self.get(key)
            self.set(key, int(raw) if isinstance(current, int) else raw)

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration."""
        return {
            "field": {
                "p": 3,
                "r": 1,
                "modulus": None
            },
            "precision": {
                "default": 60,
                "series_cap": 20000
            },
            "algebra": {
                "degree_ceiling": 100000
            },
            "logging": {
                "level": "WARNING",
                "file": None
            },
            "verify": {
                "seed": 20240917,
                "commute_forms": 20,
                "commute_prec": 80,
                "eigen_prec": 120,
                "kmax": 60
            }
        }

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by key."""
        keys = key.split('.')
        value = self.config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any) -> None:
        """Set configuration value."""
        keys = key.split('.')
        config = self.config

        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def save(self) -> bool:
        """Save configuration to file."""
        return self.save_config(self.config)

    def get_config(self) -> Dict[str, Any]:
        """Get the full configuration dictionary."""
        return self.config

    def save_config(self, config: Dict[str, Any]) -> bool:
        """Save a configuration dictionary to file."""
        try:
            with open(self.config_file, "w") as f:
                if self.config_file.endswith((".yaml", ".yml")):
                    yaml.safe_dump(config, f, sort_keys=True)
                else:
                    json.dump(config, f, indent=2)
            self.config = config
            return True
        except Exception as e:
            print(f"Error saving config: {e}")
            return False
