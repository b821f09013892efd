from trikern.cli import main
import sys
sys.exit(main())
