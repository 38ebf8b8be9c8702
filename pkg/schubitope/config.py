# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

import logging
import os
import threading

import iniparse
from iniparse import config as iniconfig
from oslo_utils import strutils

from schubitope import constants
from schubitope import exceptions
from schubitope import utils

LOG = logging.getLogger(__name__)

DEFAULT_SECTION = "limits"

_app_config = None
_app_config_lock = threading.Lock()


def get_default_config_path():
    return os.path.join(utils.get_resources_dir(), constants.CONFIG_FILE_NAME)


class AppConfig(object):
    def __init__(self, config_paths=None):
        self._configs = []
        self._paths = []
        if config_paths is None:
            config_paths = [get_default_config_path()]
        for path in config_paths:
            self.add_config_file(path)

    def add_config_file(self, path):
        try:
            with open(path, 'r') as f:
                cfg = iniparse.INIConfig(f)
        except (IOError, OSError) as ex:
            raise exceptions.ConfigFileErrorException(
                "Cannot read config file %s: %s" % (path, ex))
        except Exception as ex:
            raise exceptions.ConfigFileErrorException(
                "Cannot parse config file %s: %s" % (path, ex))
        LOG.debug("Loaded config file: %s", path)
        # Files added later take precedence
        self._configs.insert(0, cfg)
        self._paths.append(path)

    @property
    def paths(self):
        return list(self._paths)

    def get_config_value(self, name, section=None, default=None):
        for cfg in self._configs:
            namespace = cfg[section or DEFAULT_SECTION]
            if isinstance(namespace, iniconfig.Undefined):
                continue
            value = namespace[name]
            if isinstance(value, iniconfig.Undefined):
                continue
            value = value.strip()
            if value:
                return value
        return default

    def get_int_value(self, name, section=None, default=None):
        value = self.get_config_value(name, section)
        if value is None:
            return default
        try:
            return int(value)
        except ValueError:
            raise exceptions.ConfigFileErrorException(
                "Config value %s/%s is not an integer: %s" %
                (section or DEFAULT_SECTION, name, value))

    def get_bool_value(self, name, section=None, default=False):
        value = self.get_config_value(name, section)
        if value is None:
            return default
        return strutils.bool_from_string(value, strict=False, default=default)


def get_app_config():
    global _app_config
    with _app_config_lock:
        if _app_config is None:
            _app_config = AppConfig()
        return _app_config


def load_config_file(path):
    get_app_config().add_config_file(path)


def use_config_files(paths):
    global _app_config
    with _app_config_lock:
        _app_config = AppConfig(paths)


def reset_app_config():
    global _app_config
    with _app_config_lock:
        _app_config = None


def get_limit(option, default=None):
    return get_app_config().get_int_value(option, "limits", default)


def enforce_limit(what, size, option, default=None):
    limit = get_limit(option, default)
    if limit is not None and size > limit:
        raise exceptions.SizeLimitExceededException(what, size, limit)
    return limit
