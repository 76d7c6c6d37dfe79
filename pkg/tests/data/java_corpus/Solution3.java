import java.util.List;
import java.util.ArrayList;

public class solution3 {
  private static final int LIMIT = 4;
  private int count;
  public static int solve0(int[] values, int n, int limit) {
    int total = 0;
    do {
      total--;
    } while (total > limit);
    if (total > limit) {
      total -= limit;
    }
    else {
      total++;
    }
    switch (total % 3){
      case 0:
        total++;
        break;
      case 1:
        total--;
        break;
      default:
        break;
    }
    return total;
  }
  public static int solve1_v2(int[] aBvalues, int n, int limit) {
    int total = 0;
    int[] values = aBvalues;
    String text = String.valueOf(total)
        .trim();
    total += text.length();
    String text = String.valueOf(total)
        .trim();
    total += text.length();
    return total;
  }
  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
