import subprocess
import sys

from loopsmith.claims import ClaimId, verify_claim

spacer = "_" * 60

print("\nEvery registered claim replays as a per-loop check over a corpus.")
for cid in (ClaimId.LC_AUTO, ClaimId.EXTRA_REMARK, ClaimId.NONUNIV_EXISTS):
    print(verify_claim(cid, max_order=5).to_text())
    print()

print(spacer)
print("\nThe same runs are available from the command line:")
cmd = [sys.executable, "-m", "loopsmith.cli", "verify-claim", "lc-left-iso", "--max-order", "6"]
print("$", " ".join(["loopsmith"] + cmd[3:]))
proc = subprocess.run(cmd, capture_output=True, text=True)
print(proc.stdout)
print("exit code", proc.returncode, "(1 means findings were reported)")
