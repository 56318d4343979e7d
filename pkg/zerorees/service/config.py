# Copyright (c) OpenMMLab. All rights reserved.
import copy
import os

import pytoml
from loguru import logger

DEFAULT_CONFIG = {
    'log': {
        'level': 'INFO',
        'path': ''
    },
    'matrix': {
        'max_biclique_dim': 20
    },
    'oracle': {
        'max_vertices': 2000,
        'max_chromatic_vertices': 40,
        'max_left_path_len': 3
    },
    'generator': {
        'max_rejections': 10000
    },
    'fuzz': {
        'count': 100,
        'max_rows': 4,
        'max_cols': 4,
        'max_order': 4,
        'zero_prob': 0.4,
        'seed': 0
    }
}


def _merge(base: dict, override: dict) -> dict:
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


def load_config(config_path: str = 'config.ini') -> dict:
    """Read `config_path` over the built-in defaults."""
    config = copy.deepcopy(DEFAULT_CONFIG)
    if not config_path or not os.path.exists(config_path):
        logger.warning(f'{config_path} not found, use default config')
        return config
    with open(config_path, encoding='utf8') as f:
        _merge(config, pytoml.load(f))
    return config
