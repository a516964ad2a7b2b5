# Copyright (c) 2026 The sdfseg Authors. All Rights Reserved
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import filecmp
import os
import subprocess
import sys

import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))
FIX = os.environ.get("SDFSEG_FIXTURES", os.path.join(HERE, "..", "fixtures"))
GENERATOR = os.path.join(HERE, "..", "oracle", "generate_fixtures.py")


def test_fixtures_regenerate_identically(tmp_path):
    subprocess.run([sys.executable, GENERATOR, str(tmp_path)], check=True)
    names = sorted(os.listdir(tmp_path))
    assert names == sorted(os.listdir(FIX))
    for name in names:
        if name.endswith(".png"):
            from PIL import Image

            a = np.asarray(Image.open(tmp_path / name))
            b = np.asarray(Image.open(os.path.join(FIX, name)))
            assert np.array_equal(a, b), name
        else:
            assert filecmp.cmp(tmp_path / name, os.path.join(FIX, name), shallow=False), name
