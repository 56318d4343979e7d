# Copyright (c) OpenMMLab. All rights reserved.
import re
from typing import Tuple, Union

__version__ = '0.3.0'


def parse_version_info(version_str: str) -> Tuple[Union[int, str], ...]:
    """'0.3.0' -> (0, 3, 0); a pre-release tag such as 'rc1' or 'dev2' on
    the last part becomes a trailing string item."""
    info = []
    for part in version_str.split('.'):
        match = re.fullmatch(r'(\d+)((?:rc|dev)\d+)?', part)
        if match is None:
            raise ValueError(f'bad version part `{part}` in {version_str}')
        info.append(int(match.group(1)))
        if match.group(2):
            info.append(match.group(2))
    return tuple(info)


version_info = parse_version_info(__version__)
