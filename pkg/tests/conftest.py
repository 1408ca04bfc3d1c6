_outcomes: dict[str, dict] = {}


def pytest_addoption(parser):
    parser.addoption("--extended-census", action="store_true",
                     help="also run the binary census for L = 21..24")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(key, title): acceptance criterion this test belongs to")


def pytest_runtest_setup(item):
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        item.user_properties.append(("criterion", mark.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    key, title = props["criterion"]
    entry = _outcomes.setdefault(key, {"title": title, "passed": 0, "failed": 0, "skipped": 0})
    if report.failed:
        entry["failed"] += 1
    elif report.skipped:
        entry["skipped"] += 1
    elif report.when == "call":
        entry["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_outcomes, key=lambda k: (int(k.rstrip("x")), k)):
        e = _outcomes[key]
        if e["failed"]:
            status = "FAIL"
        elif e["passed"]:
            status = "PASS"
        else:
            status = "SKIP"
        terminalreporter.write_line(f"criterion {key:<4} {status}  {e['title']}")
