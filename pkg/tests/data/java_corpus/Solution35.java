import java.util.List;
import java.util.ArrayList;

public class Solution35 {
  private static final int LIMIT = 86;
  private int count, other;

  public static int solve0_v2(int[] values, int n, int limit) {
    int total = 0;
    try {
      total = Integer.parseInt("" + total);
    } catch (NumberFormatException ex) {
      total = 0;
    }
    switch (total % 3) {
      case 0:
        total++;
      case 1:
        total--;
        break;
      default:
        break;
    }
    int mixed = total
        + limit * 2
        - n;
    total = mixed;
    total += compute(total, limit, n);
    return total;
  }

  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
