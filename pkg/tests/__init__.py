# Tests 模块
