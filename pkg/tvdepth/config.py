# -*- coding: utf-8 -*-
from __future__ import annotations

import configparser
import os
from functools import cache
from pathlib import Path

from tvdepth.utils import is_testing_env


DEFAULT_CONFIG_PATH = Path(__file__).parent / "config.default.ini"
USER_CONFIG_PATH = Path("~/.tvdepth/config.ini").expanduser()


class ConfigParserMod(configparser.ConfigParser):
    # https://stackoverflow.com/a/19359720/1895939
    optionxform = str  # type: ignore
    BOOLEAN_STATES = {
        **{k: False for k in ("0", "false", "no", "off")},
        **{k: True for k in ("1", "yes", "true", "on")},
    }

    def __init__(self, *args, **kwargs):
        super().__init__(*args, allow_no_value=True, **kwargs)

    def _warn_missing(self, section: str, option: str) -> None:
        from tvdepth.logging import create_logger

        create_logger("read config").warning(
            f"""Not found in configuration: '{section}.{option}'. Are you missing the following in your config?

[{section}]
{option}=some value

"""
        )

    def getfloat(self, section: str, option: str, *args, **kwargs) -> float:  # type: ignore
        try:
            return super().getfloat(section, option, *args, **kwargs)
        except (configparser.NoSectionError, configparser.NoOptionError) as e:
            self._warn_missing(section, option)
            raise e

    def getint(self, section: str, option: str, *args, **kwargs) -> int:  # type: ignore
        try:
            return super().getint(section, option, *args, **kwargs)
        except (configparser.NoSectionError, configparser.NoOptionError) as e:
            self._warn_missing(section, option)
            raise e

    def get(self, section: str, option: str, *args, **kwargs):  # type: ignore
        try:
            return super().get(section, option, *args, **kwargs)
        except (configparser.NoSectionError, configparser.NoOptionError) as e:
            if "fallback" in kwargs:
                return kwargs["fallback"]
            self._warn_missing(section, option)
            raise e


def get_config_paths() -> list[Path]:
    """
    Later files override earlier ones. Missing files are skipped by ConfigParser.read.
    """
    paths = [DEFAULT_CONFIG_PATH]

    if is_testing_env():
        paths.append(Path(os.environ.get("GLOBAL_CONFIG", "./config.dev.ini")))
    else:
        paths.append(USER_CONFIG_PATH)

    if os.environ.get("TVDEPTH_CONFIG"):
        paths.append(Path(os.environ["TVDEPTH_CONFIG"]))

    return paths


def get_config() -> ConfigParserMod:
    """
    Reads the layered configuration from disk. The packaged `config.default.ini` always
    provides every option, so a fresh install works without any user file:

        [detection]
        shape_factor=3.0
        magnitude_factor=1.5
        central_proportion=0.5
        weight=sd

    A user's `~/.tvdepth/config.ini` (or the file named by TVDEPTH_CONFIG) only needs
    the options it changes.
    """
    config = ConfigParserMod(strict=False)

    if not DEFAULT_CONFIG_PATH.is_file():
        raise FileNotFoundError(f"Packaged configuration at {DEFAULT_CONFIG_PATH} is missing. Reinstall tvdepth?")

    try:
        config.read(get_config_paths())
    except configparser.MissingSectionHeaderError as e:
        print("Bad config state. Check your config.ini for a missing [section] header.")
        raise e
    except configparser.DuplicateSectionError as e:
        print(e)
        pass

    return config


@cache
def get_worker_threads_setting() -> int:
    if os.environ.get("TVDEPTH_THREADS") is not None:
        return int(os.environ["TVDEPTH_THREADS"])
    return config.getint("workers", "threads", fallback=0)


config = get_config()


def get_detection_config(
    shape_factor: float | None = None,
    magnitude_factor: float | None = None,
    central_proportion: float | None = None,
    weight_choice: str | None = None,
):
    """
    `[detection]` values, with any non-None argument taking precedence.
    """
    from tvdepth.structs import DetectionConfig

    return DetectionConfig(
        shape_factor=shape_factor if shape_factor is not None else config.getfloat("detection", "shape_factor"),
        magnitude_factor=(
            magnitude_factor if magnitude_factor is not None else config.getfloat("detection", "magnitude_factor")
        ),
        central_proportion=(
            central_proportion
            if central_proportion is not None
            else config.getfloat("detection", "central_proportion")
        ),
        weight_choice=weight_choice if weight_choice is not None else config.get("detection", "weight"),  # type: ignore
    )
