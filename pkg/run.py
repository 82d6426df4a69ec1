"""
treecat 启动脚本

    python run.py kl --graph fan3.json
    python run.py reproduce
"""

import os
import sys


def main():
    # 确保从项目根目录导入各个包
    script_dir = os.path.dirname(os.path.abspath(__file__))
    if script_dir not in sys.path:
        sys.path.insert(0, script_dir)

    from cli.main import run
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
